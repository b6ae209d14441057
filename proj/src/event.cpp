#include "gridsim/event.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace gridsim {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::LocalAccess: return "LocalAccess";
    case EventKind::RemoteAccess: return "RemoteAccess";
    case EventKind::Replication: return "Replication";
    case EventKind::Deletion: return "Deletion";
    case EventKind::SiteFailureObserved: return "SiteFailureObserved";
  }
  return "?";
}

EventKind event_kind_from_string(const std::string& token) {
  if (token == "LocalAccess") return EventKind::LocalAccess;
  if (token == "RemoteAccess") return EventKind::RemoteAccess;
  if (token == "Replication") return EventKind::Replication;
  if (token == "Deletion") return EventKind::Deletion;
  if (token == "SiteFailureObserved") return EventKind::SiteFailureObserved;
  throw GridError("unknown event kind: " + token);
}

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

void dump_event_log(const EventLog& log, std::ostream& out) {
  std::string line;
  for (const Event& e : log) {
    line.clear();
    append_double(line, e.timestamp_ms);
    line += ' ';
    line += to_string(e.kind);
    line += ' ';
    line += std::to_string(e.requester);
    line += ' ';
    line += std::to_string(e.holder);
    line += ' ';
    line += std::to_string(e.file);
    line += ' ';
    line += e.job ? std::to_string(*e.job) : std::string("-");
    line += '\n';
    out << line;
  }
}

std::string dump_event_log(const EventLog& log) {
  std::ostringstream out;
  dump_event_log(log, out);
  return out.str();
}

EventLog parse_event_log(std::istream& in) {
  EventLog log;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string ts, kind, req, holder, file, job;
    if (!(fields >> ts >> kind >> req >> holder >> file >> job))
      throw GridError("event log line " + std::to_string(line_no) + ": expected 6 fields");
    Event e;
    double v = 0.0;
    const auto res = std::from_chars(ts.data(), ts.data() + ts.size(), v);
    if (res.ec != std::errc() || res.ptr != ts.data() + ts.size())
      throw GridError("event log line " + std::to_string(line_no) + ": bad timestamp");
    e.timestamp_ms = v;
    e.kind = event_kind_from_string(kind);
    e.requester = static_cast<SiteId>(std::stoul(req));
    e.holder = static_cast<SiteId>(std::stoul(holder));
    e.file = static_cast<FileId>(std::stoul(file));
    if (job != "-") e.job = static_cast<JobId>(std::stoul(job));
    log.push_back(e);
  }
  return log;
}

}  // namespace gridsim
