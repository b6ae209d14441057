#ifndef GRIDSIM_EVENT_HPP
#define GRIDSIM_EVENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gridsim/grid.hpp"

namespace gridsim {

enum class EventKind : std::uint8_t {
  LocalAccess,
  RemoteAccess,
  Replication,
  Deletion,
  SiteFailureObserved,
};

const char* to_string(EventKind kind);
EventKind event_kind_from_string(const std::string& token);

/// One line of grid history. `holder` is the serving/source site (equal to
/// `requester` for local accesses and deletions). `job` is absent for
/// strategy-initiated period work.
struct Event {
  double timestamp_ms = 0.0;
  EventKind kind = EventKind::LocalAccess;
  SiteId requester = 0;
  SiteId holder = 0;
  FileId file = 0;
  std::optional<JobId> job;

  bool operator==(const Event&) const = default;
};

using EventLog = std::vector<Event>;

/// One record per line: `timestamp kind requester holder file job`, job as
/// `-` when absent. Timestamps use shortest round-trip formatting so a
/// reloaded log reproduces metrics bit for bit.
void dump_event_log(const EventLog& log, std::ostream& out);
std::string dump_event_log(const EventLog& log);
EventLog parse_event_log(std::istream& in);

}  // namespace gridsim

#endif
