#ifndef GRIDSIM_STRATEGY_HPP
#define GRIDSIM_STRATEGY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gridsim/grid.hpp"
#include "gridsim/mining.hpp"
#include "gridsim/workload.hpp"

namespace gridsim {

/// Read-only view of the grid a strategy decides against.
struct GridView {
  const GridTopology* topology = nullptr;
  const std::vector<FileSpec>* files = nullptr;
  const ReplicaCatalog* catalog = nullptr;
  const StorageState* storage = nullptr;
};

/// Answer to "this site wants a file it does not hold".
struct StrategyVerdict {
  enum class Kind { RemoteRead, ReplicateHere };
  Kind kind = Kind::RemoteRead;
  std::vector<FileId> deletions;  // freed before the replica lands; never masters

  static StrategyVerdict remote_read() { return {}; }
  static StrategyVerdict replicate_here(std::vector<FileId> dels = {}) {
    return {Kind::ReplicateHere, std::move(dels)};
  }
};

/// Engine-backed mutations a periodic strategy may apply between periods.
class PeriodActions {
 public:
  virtual ~PeriodActions() = default;
  /// Fetches from the best available holder and places the replica. False when
  /// every holder failed; the grid is left unchanged in that case.
  virtual bool replicate(FileId file, SiteId dest) = 0;
  virtual void delete_replica(FileId file, SiteId site) = 0;
  /// Marks a group that could not be processed (too big for the site, or not
  /// enough evictable space).
  virtual void note_group_skipped() = 0;
};

class ReplicationStrategy {
 public:
  virtual ~ReplicationStrategy() = default;
  virtual std::string_view name() const = 0;
  virtual bool periodic() const { return false; }

  /// Called for every request the site cannot serve locally.
  virtual StrategyVerdict on_request(SiteId site, FileId file, const GridView& grid) = 0;

  /// Called at each period boundary, per site, with that site's frozen history.
  virtual void on_period_end(SiteId site, const AccessHistory& period, const GridView& grid,
                             PeriodActions& actions) {
    (void)site, (void)period, (void)grid, (void)actions;
  }

  // Bookkeeping notifications from the engine.
  virtual void on_local_access(SiteId site, FileId file) { (void)site, (void)file; }
  virtual void on_replica_deleted(SiteId site, FileId file) { (void)site, (void)file; }
};

class NoReplicationStrategy final : public ReplicationStrategy {
 public:
  std::string_view name() const override { return "no_replication"; }
  StrategyVerdict on_request(SiteId, FileId, const GridView&) override {
    return StrategyVerdict::remote_read();
  }
};

/// Always replicates the requested file locally, evicting least-recently
/// accessed non-master replicas until it fits. Falls back to a remote read
/// when even full eviction cannot make room.
class LruStrategy final : public ReplicationStrategy {
 public:
  std::string_view name() const override { return "lru"; }
  StrategyVerdict on_request(SiteId site, FileId file, const GridView& grid) override;
  void on_local_access(SiteId site, FileId file) override;
  void on_replica_deleted(SiteId site, FileId file) override;

 private:
  std::uint64_t tick_ = 0;
  std::map<SiteId, std::map<FileId, std::uint64_t>> last_access_;
};

/// Weight ranking a file for deletion at a site: size times the site's request
/// count for it this period, divided by the bandwidth to the best replica held
/// elsewhere (the cost basis for re-fetching it). Infinite when no other
/// holder exists.
double file_weight(FileId file, SiteId site, const AccessHistory& period,
                   const ReplicaCatalog& catalog, const GridTopology& topology,
                   const std::vector<FileSpec>& files);

/// Periodic strategy: mines maximal frequent correlated patterns from each
/// site's period history and co-locates each group, replacing low-weight local
/// files when space is short and the trade pays off.
class RscpStrategy final : public ReplicationStrategy {
 public:
  explicit RscpStrategy(MiningThresholds thresholds, std::size_t candidate_limit = 1'000'000)
      : thresholds_(thresholds), candidate_limit_(candidate_limit) {}

  std::string_view name() const override { return "rscp"; }
  bool periodic() const override { return true; }
  StrategyVerdict on_request(SiteId, FileId, const GridView&) override {
    return StrategyVerdict::remote_read();  // all replication happens between periods
  }
  void on_period_end(SiteId site, const AccessHistory& period, const GridView& grid,
                     PeriodActions& actions) override;

  /// Groups from one site history, largest first (ties lexicographic).
  static std::vector<std::vector<FileId>> correlated_groups(const AccessHistory& period,
                                                            const MiningThresholds& thresholds,
                                                            std::size_t candidate_limit);

 private:
  MiningThresholds thresholds_;
  std::size_t candidate_limit_;
};

std::unique_ptr<ReplicationStrategy> make_strategy(const std::string& name,
                                                   const MiningThresholds& rscp_thresholds,
                                                   std::size_t candidate_limit = 1'000'000);

}  // namespace gridsim

#endif
