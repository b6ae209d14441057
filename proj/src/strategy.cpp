#include "gridsim/strategy.hpp"

#include <algorithm>
#include <limits>

namespace gridsim {

StrategyVerdict LruStrategy::on_request(SiteId site, FileId file, const GridView& grid) {
  const MegaBytes size = grid.files->at(file).size_mb;
  const MegaBytes free = grid.storage->free(site);
  if (free >= size) return StrategyVerdict::replicate_here();

  // oldest-first eviction candidates: local non-master replicas
  std::vector<std::pair<std::uint64_t, FileId>> order;
  const auto& recency = last_access_[site];
  for (FileId f = 0; f < grid.catalog->file_count(); ++f) {
    if (!grid.catalog->holds(f, site) || grid.catalog->master(f) == site) continue;
    const auto it = recency.find(f);
    order.emplace_back(it == recency.end() ? 0 : it->second, f);
  }
  std::sort(order.begin(), order.end());

  std::vector<FileId> deletions;
  MegaBytes freed = 0;
  for (const auto& [tick, f] : order) {
    if (free + freed >= size) break;
    deletions.push_back(f);
    freed += grid.files->at(f).size_mb;
  }
  if (free + freed >= size) return StrategyVerdict::replicate_here(std::move(deletions));
  return StrategyVerdict::remote_read();
}

void LruStrategy::on_local_access(SiteId site, FileId file) { last_access_[site][file] = ++tick_; }

void LruStrategy::on_replica_deleted(SiteId site, FileId file) {
  auto it = last_access_.find(site);
  if (it != last_access_.end()) it->second.erase(file);
}

double file_weight(FileId file, SiteId site, const AccessHistory& period,
                   const ReplicaCatalog& catalog, const GridTopology& topology,
                   const std::vector<FileSpec>& files) {
  const auto& holders = catalog.holders(file);
  const bool has_other_holder =
      std::any_of(holders.begin(), holders.end(), [&](SiteId h) { return h != site; });
  if (!has_other_holder) return std::numeric_limits<double>::infinity();
  const SiteId source = best_other_replica_site(file, site, catalog, topology);
  const double requests = static_cast<double>(period.file_requests(file));
  return static_cast<double>(files.at(file).size_mb) * requests / topology.bandwidth(site, source);
}

std::vector<std::vector<FileId>> RscpStrategy::correlated_groups(const AccessHistory& period,
                                                                 const MiningThresholds& thresholds,
                                                                 std::size_t candidate_limit) {
  std::vector<std::vector<FileId>> groups;
  const BinaryContext context = to_binary_context(period);
  if (context.transaction_count() == 0 || context.item_count() == 0) return groups;
  // columns are added in FileId order, so pattern order carries over to files
  for (const Pattern& p : mine_mfcp(context, thresholds, candidate_limit)) {
    std::vector<FileId> group;
    group.reserve(p.items.size());
    for (std::uint32_t column : p.items) group.push_back(context.item_id(column));
    groups.push_back(std::move(group));
  }
  return groups;
}

void RscpStrategy::on_period_end(SiteId site, const AccessHistory& period, const GridView& grid,
                                 PeriodActions& actions) {
  const auto groups = correlated_groups(period, thresholds_, candidate_limit_);
  const auto& files = *grid.files;
  const auto& catalog = *grid.catalog;

  for (const auto& group : groups) {
    std::vector<FileId> missing;
    MegaBytes needed = 0;
    for (FileId f : group) {
      if (!catalog.holds(f, site)) {
        missing.push_back(f);  // group items are sorted, so fetch order is ascending
        needed += files.at(f).size_mb;
      }
    }
    if (missing.empty()) continue;
    if (needed > grid.storage->capacity(site)) {
      actions.note_group_skipped();
      continue;
    }

    if (needed <= grid.storage->free(site)) {
      for (FileId f : missing) actions.replicate(f, site);
      continue;
    }

    // replacement: cheapest-to-rebuy local files go first
    std::vector<std::pair<double, FileId>> candidates;
    for (FileId f = 0; f < catalog.file_count(); ++f) {
      if (!catalog.holds(f, site) || catalog.master(f) == site) continue;
      if (std::binary_search(group.begin(), group.end(), f)) continue;
      candidates.emplace_back(file_weight(f, site, period, catalog, *grid.topology, files), f);
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<FileId> to_delete;
    MegaBytes accumulated_free = grid.storage->free(site);
    double accumulated_weight = 0.0;
    for (const auto& [weight, f] : candidates) {
      if (accumulated_free >= needed) break;
      accumulated_free += files.at(f).size_mb;
      accumulated_weight += weight;
      to_delete.push_back(f);
    }
    if (accumulated_free < needed) {
      actions.note_group_skipped();
      continue;
    }

    const double avg_delete_weight = accumulated_weight / static_cast<double>(to_delete.size());
    double group_weight = 0.0;
    for (FileId f : missing) group_weight += file_weight(f, site, period, catalog, *grid.topology, files);
    const double avg_group_weight = group_weight / static_cast<double>(missing.size());

    if (avg_delete_weight <= avg_group_weight) {
      for (FileId f : to_delete) actions.delete_replica(f, site);
      for (FileId f : missing) actions.replicate(f, site);
    }
  }
}

std::unique_ptr<ReplicationStrategy> make_strategy(const std::string& name,
                                                   const MiningThresholds& rscp_thresholds,
                                                   std::size_t candidate_limit) {
  if (name == "no_replication") return std::make_unique<NoReplicationStrategy>();
  if (name == "lru") return std::make_unique<LruStrategy>();
  if (name == "rscp") return std::make_unique<RscpStrategy>(rscp_thresholds, candidate_limit);
  throw GridError("unknown strategy: " + name);
}

}  // namespace gridsim
