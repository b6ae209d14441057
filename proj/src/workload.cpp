#include "gridsim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gridsim/rng.hpp"

namespace gridsim {

RequestGenerator::RequestGenerator(const JobSpec& job, std::uint64_t scenario_seed)
    : job_(job), rng_(make_rng(scenario_seed, "job", job.id)) {
  if (job.file_universe.empty()) throw GridError("job file_universe must not be empty");
  if (job.pattern.kind == PatternKind::RandomZipf) {
    zipf_cdf_.reserve(job.file_universe.size());
    double acc = 0.0;
    for (std::size_t r = 1; r <= job.file_universe.size(); ++r) {
      acc += std::pow(static_cast<double>(r), -job.pattern.exponent);
      zipf_cdf_.push_back(acc);
    }
  }
}

FileId RequestGenerator::next() {
  const auto& universe = job_.file_universe;
  const std::size_t n = universe.size();
  switch (job_.pattern.kind) {
    case PatternKind::Sequential: {
      if (first_) {
        first_ = false;
        position_ = 0;
      } else {
        position_ = (position_ + 1) % n;
      }
      return universe[position_];
    }
    case PatternKind::RandomUniform:
      return universe[uniform_index(rng_, n)];
    case PatternKind::RandomWalkGaussian: {
      if (first_) {
        first_ = false;
      } else {
        const long long step = std::llround(gaussian(rng_, job_.pattern.sigma));
        long long next = static_cast<long long>(position_) + step;
        next = std::clamp<long long>(next, 0, static_cast<long long>(n) - 1);
        position_ = static_cast<std::size_t>(next);
      }
      return universe[position_];
    }
    case PatternKind::RandomZipf: {
      const double u = uniform01(rng_) * zipf_cdf_.back();
      const auto it = std::lower_bound(zipf_cdf_.begin(), zipf_cdf_.end(), u);
      const std::size_t rank = static_cast<std::size_t>(it - zipf_cdf_.begin());
      return universe[std::min(rank, n - 1)];
    }
  }
  throw GridError("unknown access pattern");
}

void AccessHistory::record(JobId job, FileId file) {
  auto [it, inserted] = rows_.try_emplace(job);
  if (inserted) it->second.assign(file_count_, 0);
  it->second.at(file) += 1;
}

std::uint64_t AccessHistory::total_requests() const {
  std::uint64_t total = 0;
  for (const auto& [job, counts] : rows_)
    total = std::accumulate(counts.begin(), counts.end(), total);
  return total;
}

std::uint64_t AccessHistory::file_requests(FileId file) const {
  std::uint64_t total = 0;
  for (const auto& [job, counts] : rows_) total += counts.at(file);
  return total;
}

AccessHistory AccessHistory::close_period() {
  AccessHistory frozen = *this;
  rows_.clear();
  period_ += 1;
  return frozen;
}

}  // namespace gridsim
