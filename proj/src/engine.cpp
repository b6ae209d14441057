#include "gridsim/engine.hpp"

#include <algorithm>

#include "gridsim/rng.hpp"

namespace gridsim {

/// PeriodActions bound to the live engine state.
class Engine::Actions final : public PeriodActions {
 public:
  explicit Actions(Engine& engine) : engine_(engine) {}

  bool replicate(FileId file, SiteId dest) override {
    Engine& e = engine_;
    const auto source = e.pick_source(file, dest, std::nullopt);
    if (!source) {
      e.run_stats_.periodic_fetch_failures += 1;
      return false;
    }
    const double transfer_ms =
        static_cast<double>(e.files_.at(file).size_mb) / e.topology_.bandwidth(dest, *source) * 1000.0;
    e.now_ms_ += transfer_ms;  // period work advances time but bills no job
    place_replica(file, dest, e.catalog_, e.storage_, e.files_);
    e.log_.push_back({e.now_ms_, EventKind::Replication, dest, *source, file, std::nullopt});
    e.strategy_->on_local_access(dest, file);
    return true;
  }

  void delete_replica(FileId file, SiteId site) override {
    Engine& e = engine_;
    gridsim::delete_replica(file, site, e.catalog_, e.storage_, e.files_);
    e.log_.push_back({e.now_ms_, EventKind::Deletion, site, site, file, std::nullopt});
    e.strategy_->on_replica_deleted(site, file);
  }

  void note_group_skipped() override { engine_.run_stats_.periodic_groups_skipped += 1; }

 private:
  Engine& engine_;
};

Engine::Engine(const GridTopology& topology, std::vector<FileSpec> files,
               ReplicaCatalog initial_catalog, std::vector<JobSpec> jobs,
               std::unique_ptr<ReplicationStrategy> strategy, std::uint64_t seed,
               std::uint32_t period_jobs)
    : topology_(topology),
      files_(std::move(files)),
      catalog_(std::move(initial_catalog)),
      storage_(topology),
      jobs_(std::move(jobs)),
      strategy_(std::move(strategy)),
      seed_(seed),
      period_jobs_(period_jobs == 0 ? 1 : period_jobs) {
  stats_.assign(topology_.site_count(), SiteStats{});
  job_rt_ms_.assign(jobs_.size(), 0.0);
  histories_.reserve(topology_.site_count());
  failure_rng_.reserve(topology_.site_count());
  for (SiteId s = 0; s < topology_.site_count(); ++s) {
    histories_.emplace_back(s, files_.size());
    failure_rng_.push_back(make_rng(seed_, "failure", s));
  }
  // charge the initial placement to storage and seed replica recency
  for (FileId f = 0; f < catalog_.file_count(); ++f) {
    for (SiteId s : catalog_.holders(f)) {
      storage_.take(s, files_.at(f).size_mb);
      strategy_->on_local_access(s, f);
    }
  }
}

void Engine::run() {
  for (std::size_t j = 0; j < jobs_.size(); ++j) {
    const JobSpec& job = jobs_[j];
    RequestGenerator gen(job, seed_);
    current_job_rt_ = &job_rt_ms_[j];
    for (std::uint32_t r = 0; r < job.request_count; ++r) resolve_request(job, gen.next());
    current_job_rt_ = nullptr;
    completed_jobs_ += 1;
    if (completed_jobs_ % period_jobs_ == 0) period_boundary();
  }
}

void Engine::record_access(const JobSpec& job, FileId file) {
  histories_[job.origin].record(job.id, file);
}

std::optional<SiteId> Engine::pick_source(FileId file, SiteId requester, std::optional<JobId> job) {
  // candidates by descending bandwidth, ties toward the smaller id
  std::vector<SiteId> candidates;
  for (SiteId h : catalog_.holders(file))
    if (h != requester) candidates.push_back(h);
  std::stable_sort(candidates.begin(), candidates.end(), [&](SiteId a, SiteId b) {
    return topology_.bandwidth(requester, a) > topology_.bandwidth(requester, b);
  });

  for (SiteId h : candidates) {
    stats_[h].site_requests += 1;
    const double p = topology_.site(h).failure_profile;
    if (p > 0.0 && uniform01(failure_rng_[h]) < p) {
      stats_[h].failures += 1;
      log_.push_back({now_ms_, EventKind::SiteFailureObserved, requester, h, file, job});
      continue;
    }
    return h;
  }
  return std::nullopt;
}

void Engine::resolve_request(const JobSpec& job, FileId file) {
  const SiteId site = job.origin;

  if (catalog_.holds(file, site)) {
    log_.push_back({now_ms_, EventKind::LocalAccess, site, site, file, job.id});
    record_access(job, file);
    strategy_->on_local_access(site, file);
    return;
  }

  const StrategyVerdict verdict = strategy_->on_request(site, file, view());
  const auto source = pick_source(file, site, job.id);
  if (!source) {
    run_stats_.aborted_requests += 1;
    return;
  }

  const double transfer_ms =
      static_cast<double>(files_.at(file).size_mb) / topology_.bandwidth(site, *source) * 1000.0;

  if (verdict.kind == StrategyVerdict::Kind::ReplicateHere) {
    for (FileId doomed : verdict.deletions) {
      gridsim::delete_replica(doomed, site, catalog_, storage_, files_);
      log_.push_back({now_ms_, EventKind::Deletion, site, site, doomed, job.id});
      strategy_->on_replica_deleted(site, doomed);
    }
    now_ms_ += transfer_ms;
    if (current_job_rt_) *current_job_rt_ += transfer_ms;  // synchronous fetch bills the job
    place_replica(file, site, catalog_, storage_, files_);
    log_.push_back({now_ms_, EventKind::Replication, site, *source, file, job.id});
    log_.push_back({now_ms_, EventKind::LocalAccess, site, site, file, job.id});
    record_access(job, file);
    strategy_->on_local_access(site, file);
  } else {
    now_ms_ += transfer_ms;
    if (current_job_rt_) *current_job_rt_ += transfer_ms;
    log_.push_back({now_ms_, EventKind::RemoteAccess, site, *source, file, job.id});
    record_access(job, file);
  }
}

void Engine::period_boundary() {
  Actions actions(*this);
  for (SiteId s = 0; s < topology_.site_count(); ++s) {
    const AccessHistory frozen = histories_[s].close_period();
    if (strategy_->periodic()) strategy_->on_period_end(s, frozen, view(), actions);
  }
  boundaries_.push_back({histories_.empty() ? 0 : histories_[0].period(), log_.size(), completed_jobs_});
}

}  // namespace gridsim
