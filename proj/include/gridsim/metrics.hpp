#ifndef GRIDSIM_METRICS_HPP
#define GRIDSIM_METRICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "gridsim/event.hpp"
#include "gridsim/grid.hpp"

namespace gridsim {

/// Request counts distilled from an event log. Remote counts are grouped by
/// (requester, file, holder); local counts by (site, file). Replication counts
/// keep their (destination, file, source) triple.
struct AccessLedger {
  std::map<std::tuple<SiteId, FileId, SiteId>, std::uint64_t> remote;
  std::map<std::pair<SiteId, FileId>, std::uint64_t> local;
  std::map<std::tuple<SiteId, FileId, SiteId>, std::uint64_t> replications;

  std::uint64_t local_total = 0;
  std::uint64_t remote_total = 0;
  std::uint64_t replication_total = 0;

  std::uint64_t local_count(SiteId site, FileId file) const;
  std::uint64_t remote_count(SiteId requester, FileId file, SiteId holder) const;
  /// All requests the site made for the file, local and remote together.
  std::uint64_t demand(SiteId site, FileId file) const;
};

/// End state reached by replaying a log over the initial placement, plus the
/// ledger. Every metric is a pure function of this snapshot, so recomputing
/// from a dumped log reproduces the original report bit for bit.
struct GridSnapshot {
  const GridTopology* topology = nullptr;
  std::vector<FileSpec> files;
  ReplicaCatalog catalog;
  StorageState storage;
  std::vector<SiteStats> stats;
  AccessLedger ledger;
  std::vector<double> job_rt_ms;
  std::uint64_t aborted_requests = 0;
};

GridSnapshot replay_log(const EventLog& log, const GridTopology& topology,
                        const std::vector<FileSpec>& files, const ReplicaCatalog& initial_catalog,
                        std::size_t job_count);

double response_time_ms(const GridSnapshot& snapshot, JobId job);
double mean_job_time_ms(const GridSnapshot& snapshot);

/// (remote accesses + replications) / (remote + local accesses). Can exceed 1
/// when replications outnumber local accesses; reported raw and flagged, never
/// clamped.
double enu(const AccessLedger& ledger);

/// local / (local + remote + replications).
double hit_ratio(const AccessLedger& ledger);

/// Placement weight of one replica: sum over its remote requesters of
/// count x bandwidth x holder availability.
double rqd_replica(FileId file, SiteId holder, const AccessLedger& ledger,
                   const GridTopology& topology, const std::vector<SiteStats>& stats);

/// Mean over master files of the file's mean replica weight.
double rqd_files(const GridSnapshot& snapshot);
/// Mean over sites of the site's mean held-replica weight; empty sites count 0.
double rqd_sites(const GridSnapshot& snapshot);

/// Replication benefit over benefit-plus-remote-cost, in [0, 1]. Zero without
/// replications, one when replications exist and nothing was read remotely.
double red(const GridSnapshot& snapshot);

/// Mean over files of per-replica local-cost / (local + remote cost) ratios.
/// Replicas and files without any accesses are left out of their means.
double disq(const GridSnapshot& snapshot);

/// Whether a high raw value is good (direct) or bad (counterproductive) for
/// the strategy; picks the correction direction.
enum class CorrectionSign : int { direct = 1, counterproductive = -1 };

/// CorrectMetric = Metric - DisQ x Metric x X. RT and ENU use X = -1, so the
/// correction inflates results obtained on poor distributions.
double correct_metric(double value, double disq_before, CorrectionSign sign);
inline double correct_rt(double rt_ms, double disq_before) {
  return correct_metric(rt_ms, disq_before, CorrectionSign::counterproductive);
}
inline double correct_enu(double enu_value, double disq_before) {
  return correct_metric(enu_value, disq_before, CorrectionSign::counterproductive);
}

/// Mean of used/capacity over all sites, in percent.
double storage_fill_pct(const StorageState& storage, const GridTopology& topology);

double round_half_up(double value, int decimals);

/// (a - b) / a x 100.
double performance_difference_percent(double a, double b);
/// Percentage truncated to one decimal, printed with two ("41.90").
std::string format_percent(double pct);

struct MetricReport {
  double rt_mean_ms = 0.0;
  double enu = 0.0;
  double hit_ratio = 0.0;
  std::uint64_t replication_count = 0;
  double storage_fill_pct = 0.0;
  double rqd_files = 0.0;
  double rqd_sites = 0.0;
  double red = 0.0;
  double disq = 0.0;
  double disq_initial = 0.0;  // quality of the starting distribution, used by the correction
  double correct_rt_ms = 0.0;
  double correct_enu = 0.0;
  std::uint64_t local_accesses = 0;
  std::uint64_t remote_accesses = 0;
  std::uint64_t aborted_requests = 0;
  bool enu_above_one = false;
};

MetricReport compute_report(const GridSnapshot& snapshot, double disq_initial);

}  // namespace gridsim

#endif
