#include "gridsim/grid.hpp"

#include <algorithm>
#include <cmath>

namespace gridsim {

GridTopology::GridTopology(std::vector<SiteSpec> sites, std::vector<double> bandwidth_matrix)
    : sites_(std::move(sites)), bandwidth_(std::move(bandwidth_matrix)) {
  const std::size_t n = sites_.size();
  if (bandwidth_.size() != n * n) throw GridError("bandwidth matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double bw = bandwidth_[i * n + j];
      if (!(bw > 0.0)) throw GridError("bandwidth must be positive between distinct sites");
      if (bw != bandwidth_[j * n + i]) throw GridError("bandwidth matrix must be symmetric");
    }
  }
}

GridTopology GridTopology::uniform(std::vector<SiteSpec> sites, double bandwidth_mbps) {
  const std::size_t n = sites.size();
  std::vector<double> bw(n * n, bandwidth_mbps);
  return GridTopology(std::move(sites), std::move(bw));
}

void GridTopology::set_bandwidth(SiteId a, SiteId b, double mbps) {
  if (a == b) return;
  if (!(mbps > 0.0)) throw GridError("bandwidth must be positive");
  const std::size_t n = sites_.size();
  bandwidth_.at(static_cast<std::size_t>(a) * n + b) = mbps;
  bandwidth_.at(static_cast<std::size_t>(b) * n + a) = mbps;
}

double availability(const SiteStats& stats) {
  if (stats.site_requests == 0) return 1.0;
  return 1.0 - static_cast<double>(stats.failures) / static_cast<double>(stats.site_requests);
}

bool ReplicaCatalog::holds(FileId file, SiteId site) const {
  const auto& h = holders_.at(file);
  return std::binary_search(h.begin(), h.end(), site);
}

void ReplicaCatalog::set_master(FileId file, SiteId site) {
  auto& h = holders_.at(file);
  if (!h.empty()) throw GridError("master must be the first holder of file " + std::to_string(file));
  h.push_back(site);
  master_.at(file) = site;
}

void ReplicaCatalog::add(FileId file, SiteId site) {
  auto& h = holders_.at(file);
  auto it = std::lower_bound(h.begin(), h.end(), site);
  if (it != h.end() && *it == site)
    throw GridError("site " + std::to_string(site) + " already holds file " + std::to_string(file));
  h.insert(it, site);
}

void ReplicaCatalog::remove(FileId file, SiteId site) {
  auto& h = holders_.at(file);
  auto it = std::lower_bound(h.begin(), h.end(), site);
  if (it == h.end() || *it != site)
    throw GridError("site " + std::to_string(site) + " does not hold file " + std::to_string(file));
  if (site == master_.at(file)) throw GridError("refusing to delete master replica of file " + std::to_string(file));
  if (h.size() <= 1) throw GridError("refusing to delete last replica of file " + std::to_string(file));
  h.erase(it);
}

StorageState::StorageState(const GridTopology& topo) {
  capacity_.reserve(topo.site_count());
  for (const auto& s : topo.sites()) capacity_.push_back(s.capacity_mb);
  used_.assign(topo.site_count(), 0);
}

void StorageState::take(SiteId site, MegaBytes size) {
  if (size > free(site))
    throw GridError("insufficient space at site " + std::to_string(site));
  used_.at(site) += size;
}

void StorageState::release(SiteId site, MegaBytes size) {
  if (size > used_.at(site)) throw GridError("releasing more than used at site " + std::to_string(site));
  used_.at(site) -= size;
}

namespace {

SiteId scan_holders(FileId file, SiteId requester, const ReplicaCatalog& catalog,
                    const GridTopology& topology, bool allow_self) {
  const auto& holders = catalog.holders(file);
  if (holders.empty()) throw GridError("file " + std::to_string(file) + " has no holders");
  if (allow_self && catalog.holds(file, requester)) return requester;
  bool found = false;
  SiteId best = 0;
  double best_bw = -1.0;
  for (SiteId h : holders) {  // ascending id, so ties keep the smaller id
    if (h == requester) continue;
    const double bw = topology.bandwidth(requester, h);
    if (bw > best_bw) {
      best_bw = bw;
      best = h;
      found = true;
    }
  }
  if (!found) throw GridError("file " + std::to_string(file) + " has no holder other than requester");
  return best;
}

}  // namespace

SiteId best_replica_site(FileId file, SiteId requester, const ReplicaCatalog& catalog,
                         const GridTopology& topology) {
  return scan_holders(file, requester, catalog, topology, /*allow_self=*/true);
}

SiteId best_other_replica_site(FileId file, SiteId requester, const ReplicaCatalog& catalog,
                               const GridTopology& topology) {
  return scan_holders(file, requester, catalog, topology, /*allow_self=*/false);
}

void place_replica(FileId file, SiteId site, ReplicaCatalog& catalog, StorageState& storage,
                   const std::vector<FileSpec>& files) {
  const MegaBytes size = files.at(file).size_mb;
  if (storage.free(site) < size)
    throw GridError("insufficient space at site " + std::to_string(site) + " for file " +
                    std::to_string(file));
  catalog.add(file, site);  // throws if already held, before storage changes
  storage.take(site, size);
}

void delete_replica(FileId file, SiteId site, ReplicaCatalog& catalog, StorageState& storage,
                    const std::vector<FileSpec>& files) {
  catalog.remove(file, site);  // enforces master/last-replica protection
  storage.release(site, files.at(file).size_mb);
}

}  // namespace gridsim
