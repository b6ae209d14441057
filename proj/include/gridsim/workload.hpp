#ifndef GRIDSIM_WORKLOAD_HPP
#define GRIDSIM_WORKLOAD_HPP

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "gridsim/grid.hpp"

namespace gridsim {

enum class PatternKind { Sequential, RandomUniform, RandomWalkGaussian, RandomZipf };

struct AccessPattern {
  PatternKind kind = PatternKind::Sequential;
  double sigma = 1.0;      // RandomWalkGaussian step deviation
  double exponent = 0.85;  // RandomZipf rank exponent
};

struct JobSpec {
  JobId id = 0;
  SiteId origin = 0;
  std::uint32_t request_count = 1;
  AccessPattern pattern;
  std::vector<FileId> file_universe;  // ordered; ranks and walk positions refer to it
};

/// Produces the job's file-request stream. Same (job, seed) always replays the
/// same stream.
class RequestGenerator {
 public:
  RequestGenerator(const JobSpec& job, std::uint64_t scenario_seed);

  FileId next();

 private:
  const JobSpec& job_;
  std::mt19937_64 rng_;
  std::size_t position_ = 0;           // sequential / walk index into the universe
  bool first_ = true;                  // sequential starts at the universe head
  std::vector<double> zipf_cdf_;       // cumulative rank weights, built on demand
};

/// One site's job-by-file request counts for a period. Rows appear in JobId
/// order; each row spans all files of the scenario.
class AccessHistory {
 public:
  AccessHistory() = default;
  AccessHistory(SiteId site, std::size_t file_count, std::uint32_t period = 0)
      : site_(site), file_count_(file_count), period_(period) {}

  SiteId site() const { return site_; }
  std::uint32_t period() const { return period_; }
  std::size_t file_count() const { return file_count_; }
  const std::map<JobId, std::vector<std::uint32_t>>& rows() const { return rows_; }

  void record(JobId job, FileId file);

  std::uint64_t total_requests() const;
  /// Site-level request count for one file over the period (summed over jobs).
  std::uint64_t file_requests(FileId file) const;

  /// Freezes the current period and starts the next one empty.
  AccessHistory close_period();

 private:
  SiteId site_ = 0;
  std::size_t file_count_ = 0;
  std::uint32_t period_ = 0;
  std::map<JobId, std::vector<std::uint32_t>> rows_;
};

}  // namespace gridsim

#endif
