#ifndef GRIDSIM_GRID_HPP
#define GRIDSIM_GRID_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridsim {

// Dense ordinal identifiers; matrices index by them directly.
using SiteId = std::uint32_t;
using FileId = std::uint32_t;
using JobId = std::uint32_t;

using MegaBytes = std::int64_t;

/// Thrown on catalog/storage contract violations (unknown ids, capacity
/// overruns, deleting master or last replicas).
struct GridError : std::runtime_error {
  explicit GridError(const std::string& what) : std::runtime_error(what) {}
};

struct SiteSpec {
  SiteId id = 0;
  MegaBytes capacity_mb = 0;
  double failure_profile = 0.0;  // chance an incoming request sees the site failed, [0,1)
};

struct FileSpec {
  FileId id = 0;
  MegaBytes size_mb = 0;
};

/// Static substrate: sites plus a symmetric site-to-site bandwidth matrix in
/// MB/s. bandwidth(i, i) is infinite; local access never costs transfer time.
class GridTopology {
 public:
  GridTopology() = default;
  GridTopology(std::vector<SiteSpec> sites, std::vector<double> bandwidth_matrix);

  static GridTopology uniform(std::vector<SiteSpec> sites, double bandwidth_mbps);

  std::size_t site_count() const { return sites_.size(); }
  const SiteSpec& site(SiteId id) const { return sites_.at(id); }
  const std::vector<SiteSpec>& sites() const { return sites_; }

  double bandwidth(SiteId a, SiteId b) const {
    if (a == b) return std::numeric_limits<double>::infinity();
    return bandwidth_.at(static_cast<std::size_t>(a) * sites_.size() + b);
  }
  void set_bandwidth(SiteId a, SiteId b, double mbps);

 private:
  std::vector<SiteSpec> sites_;
  std::vector<double> bandwidth_;  // row-major site_count x site_count
};

struct SiteStats {
  std::uint64_t site_requests = 0;
  std::uint64_t failures = 0;
};

/// Fraction of requests the site served, 1 - failures/requests. An unobserved
/// site (zero requests) counts as fully available.
double availability(const SiteStats& stats);

/// Which sites hold a replica of each file. The master copy is pinned: it can
/// never be deleted, so every file keeps at least one holder.
class ReplicaCatalog {
 public:
  ReplicaCatalog() = default;
  explicit ReplicaCatalog(std::size_t file_count) : holders_(file_count), master_(file_count, 0) {}

  std::size_t file_count() const { return holders_.size(); }
  bool holds(FileId file, SiteId site) const;
  const std::vector<SiteId>& holders(FileId file) const { return holders_.at(file); }
  SiteId master(FileId file) const { return master_.at(file); }

  /// Registers the original copy. Must be the file's first holder.
  void set_master(FileId file, SiteId site);
  void add(FileId file, SiteId site);
  void remove(FileId file, SiteId site);

 private:
  std::vector<std::vector<SiteId>> holders_;  // each sorted ascending
  std::vector<SiteId> master_;
};

/// Per-site storage accounting in MB. used + free == capacity at all times.
class StorageState {
 public:
  StorageState() = default;
  explicit StorageState(const GridTopology& topo);

  MegaBytes used(SiteId site) const { return used_.at(site); }
  MegaBytes capacity(SiteId site) const { return capacity_.at(site); }
  MegaBytes free(SiteId site) const { return capacity_.at(site) - used_.at(site); }

  void take(SiteId site, MegaBytes size);
  void release(SiteId site, MegaBytes size);

 private:
  std::vector<MegaBytes> used_;
  std::vector<MegaBytes> capacity_;
};

/// Holder with maximal bandwidth to the requester; the requester itself wins
/// when it holds the file. Ties break toward the smaller SiteId.
SiteId best_replica_site(FileId file, SiteId requester, const ReplicaCatalog& catalog,
                         const GridTopology& topology);

/// As above but never returns `requester` itself; used to price re-fetching a
/// locally held file from elsewhere. Throws if no other holder exists.
SiteId best_other_replica_site(FileId file, SiteId requester, const ReplicaCatalog& catalog,
                               const GridTopology& topology);

/// Checked catalog+storage updates. Throw GridError without mutating anything
/// when space is insufficient, the site already holds the file, or a master /
/// last replica would be deleted.
void place_replica(FileId file, SiteId site, ReplicaCatalog& catalog, StorageState& storage,
                   const std::vector<FileSpec>& files);
void delete_replica(FileId file, SiteId site, ReplicaCatalog& catalog, StorageState& storage,
                    const std::vector<FileSpec>& files);

}  // namespace gridsim

#endif
