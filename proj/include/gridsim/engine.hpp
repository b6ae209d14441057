#ifndef GRIDSIM_ENGINE_HPP
#define GRIDSIM_ENGINE_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "gridsim/event.hpp"
#include "gridsim/grid.hpp"
#include "gridsim/strategy.hpp"
#include "gridsim/workload.hpp"

namespace gridsim {

/// Counters outside the metric formulas: aborted requests and periodic-group
/// outcomes land here and in the run manifest.
struct RunStats {
  std::uint64_t aborted_requests = 0;
  std::uint64_t periodic_groups_skipped = 0;
  std::uint64_t periodic_fetch_failures = 0;
};

/// Marks where each period boundary fell in the event log, for per-period
/// metric series.
struct PeriodBoundary {
  std::uint32_t period = 0;
  std::size_t log_size = 0;
  std::uint32_t jobs_completed = 0;
};

/// Single-threaded discrete-event loop. Jobs run to completion in submission
/// order at their origin site; every satisfied request appends to the event
/// log; periodic strategies fire each time `period_jobs` jobs complete.
class Engine {
 public:
  Engine(const GridTopology& topology, std::vector<FileSpec> files, ReplicaCatalog initial_catalog,
         std::vector<JobSpec> jobs, std::unique_ptr<ReplicationStrategy> strategy,
         std::uint64_t seed, std::uint32_t period_jobs);

  void run();

  const EventLog& log() const { return log_; }
  const std::vector<SiteStats>& site_stats() const { return stats_; }
  const ReplicaCatalog& catalog() const { return catalog_; }
  const StorageState& storage() const { return storage_; }
  const std::vector<FileSpec>& files() const { return files_; }
  const std::vector<JobSpec>& jobs() const { return jobs_; }
  /// Per-job response time: the transfer milliseconds its requests waited for.
  const std::vector<double>& job_response_ms() const { return job_rt_ms_; }
  const RunStats& run_stats() const { return run_stats_; }
  const std::vector<PeriodBoundary>& period_boundaries() const { return boundaries_; }

 private:
  class Actions;

  void resolve_request(const JobSpec& job, FileId file);
  void period_boundary();
  /// Walks holders by descending bandwidth, sampling each one's failure
  /// profile; returns the first live holder or nullopt when all failed.
  std::optional<SiteId> pick_source(FileId file, SiteId requester, std::optional<JobId> job);
  void record_access(const JobSpec& job, FileId file);
  GridView view() const { return {&topology_, &files_, &catalog_, &storage_}; }

  const GridTopology& topology_;
  std::vector<FileSpec> files_;
  ReplicaCatalog catalog_;
  StorageState storage_;
  std::vector<JobSpec> jobs_;
  std::unique_ptr<ReplicationStrategy> strategy_;
  std::uint64_t seed_;
  std::uint32_t period_jobs_;

  double now_ms_ = 0.0;
  EventLog log_;
  std::vector<SiteStats> stats_;
  std::vector<AccessHistory> histories_;
  std::vector<double> job_rt_ms_;
  std::vector<std::mt19937_64> failure_rng_;
  RunStats run_stats_;
  std::vector<PeriodBoundary> boundaries_;
  std::uint32_t completed_jobs_ = 0;
  double* current_job_rt_ = nullptr;  // transfer costs accrue here when a job is active
};

}  // namespace gridsim

#endif
