#ifndef GRIDSIM_MINING_HPP
#define GRIDSIM_MINING_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridsim/workload.hpp"

namespace gridsim {

/// Raised when a mining level would exceed the candidate budget.
struct MiningLimitError : std::runtime_error {
  explicit MiningLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational threshold. Comparisons cross-multiply integer counts so
/// boundary cases (support exactly equal to the threshold, count equal to a
/// column average) never depend on float rounding.
class Threshold {
 public:
  Threshold() = default;
  Threshold(std::int64_t numerator, std::int64_t denominator);

  static Threshold from_decimal(const std::string& text);
  static Threshold from_double(double value);  // 1e-9 resolution

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// count/total >= threshold, exact.
  bool met_by(std::uint64_t count, std::uint64_t total) const {
    return static_cast<__int128>(count) * den_ >= static_cast<__int128>(num_) * total;
  }
  /// count/total < threshold, exact.
  bool exceeds(std::uint64_t count, std::uint64_t total) const { return !met_by(count, total); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct MiningThresholds {
  Threshold minsupp;             // in (0, 1]
  Threshold min_all_confidence;  // in [0, 1]; 0 disables the correlation filter

  MiningThresholds() : minsupp(1, 1), min_all_confidence(1, 1) {}
  MiningThresholds(Threshold supp, Threshold conf);
};

/// Boolean transactions-by-items table stored as one bitset column per item.
/// Items carry their external id (a FileId when built from an AccessHistory).
class BinaryContext {
 public:
  BinaryContext() = default;

  /// Rows of external item ids; presence is the boolean.
  static BinaryContext from_transactions(const std::vector<std::vector<std::uint32_t>>& rows);

  std::size_t transaction_count() const { return n_rows_; }
  std::size_t item_count() const { return item_ids_.size(); }
  std::uint32_t item_id(std::size_t column) const { return item_ids_.at(column); }
  bool cell(std::size_t row, std::size_t column) const;

  std::uint64_t item_support_count(std::size_t column) const { return item_counts_.at(column); }
  /// Number of transactions containing every listed column.
  std::uint64_t support_count(std::span<const std::uint32_t> columns) const;

 private:
  friend BinaryContext to_binary_context(const AccessHistory& history);
  void add_column(std::uint32_t external_id, const std::vector<bool>& cells);

  std::size_t n_rows_ = 0;
  std::size_t n_blocks_ = 0;
  std::vector<std::uint32_t> item_ids_;
  std::vector<std::uint64_t> item_counts_;
  std::vector<std::vector<std::uint64_t>> columns_;  // one bitset per item
};

/// Itemset with its support bookkeeping. Items are context column indices,
/// sorted ascending.
struct Pattern {
  std::vector<std::uint32_t> items;
  std::uint64_t support_count = 0;
  std::uint64_t total_transactions = 0;
  std::uint64_t almax_count = 0;  // largest single-item support count among members

  double supp() const {
    return total_transactions == 0 ? 0.0
                                   : static_cast<double>(support_count) / static_cast<double>(total_transactions);
  }
  double all_confidence() const {
    return almax_count == 0 ? 0.0 : static_cast<double>(support_count) / static_cast<double>(almax_count);
  }
};

/// Mean request count per requesting job; jobs that never touched the file do
/// not dilute the average. Zero when nobody requested it.
double avg_access(const AccessHistory& history, FileId file);

/// A cell is set when the job's request count reaches the file's average.
/// Files nobody requested produce all-false columns and are dropped.
BinaryContext to_binary_context(const AccessHistory& history);

/// Fraction of transactions containing the pattern. Errors on an empty context.
double support(std::span<const std::uint32_t> columns, const BinaryContext& context);

/// supp(X) / max item support in X; 1.0 for singletons.
double all_confidence(std::span<const std::uint32_t> columns, const BinaryContext& context);

/// One level of the miner: joins size-k survivors, prunes by cross-support,
/// subset membership, support and all-confidence, in that order.
std::vector<Pattern> generate_next_fcp(const std::vector<Pattern>& fcp_k,
                                       const MiningThresholds& thresholds,
                                       const BinaryContext& context,
                                       std::size_t candidate_limit = 1'000'000);

/// Maximal frequent correlated patterns of the context, sorted by size
/// descending then lexicographically by item ids.
std::vector<Pattern> mine_mfcp(const BinaryContext& context, const MiningThresholds& thresholds,
                               std::size_t candidate_limit = 1'000'000);

}  // namespace gridsim

#endif
