#include "gridsim/mining.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace gridsim {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return b == 0 ? a : gcd64(b, a % b); }

}  // namespace

Threshold::Threshold(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw std::invalid_argument("threshold denominator must be positive");
  if (numerator < 0) throw std::invalid_argument("threshold must be non-negative");
  if (denominator > 1'000'000'000) throw std::invalid_argument("threshold denominator too large");
  const std::int64_t g = numerator == 0 ? denominator : gcd64(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Threshold Threshold::from_decimal(const std::string& text) {
  if (text.empty() || text[0] == '-') throw std::invalid_argument("threshold must be non-negative: " + text);
  const auto dot = text.find('.');
  const std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (frac.size() > 9) throw std::invalid_argument("at most 9 decimal places supported: " + text);
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const std::int64_t w = whole.empty() ? 0 : std::stoll(whole);
  const std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
  if (w < 0) throw std::invalid_argument("threshold must be non-negative");
  return Threshold(w * den + f, den);
}

Threshold Threshold::from_double(double value) {
  if (value < 0.0) throw std::invalid_argument("threshold must be non-negative");
  return Threshold(std::llround(value * 1e9), 1'000'000'000);
}

MiningThresholds::MiningThresholds(Threshold supp, Threshold conf)
    : minsupp(supp), min_all_confidence(conf) {
  if (supp.numerator() == 0) throw std::invalid_argument("minsupp must be positive");
  if (static_cast<double>(supp.numerator()) > supp.denominator())
    throw std::invalid_argument("minsupp must be at most 1");
  if (static_cast<double>(conf.numerator()) > conf.denominator())
    throw std::invalid_argument("min_all_confidence must be at most 1");
}

void BinaryContext::add_column(std::uint32_t external_id, const std::vector<bool>& cells) {
  std::vector<std::uint64_t> bits(n_blocks_, 0);
  std::uint64_t count = 0;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (cells[r]) {
      bits[r / 64] |= (1ULL << (r % 64));
      ++count;
    }
  }
  item_ids_.push_back(external_id);
  item_counts_.push_back(count);
  columns_.push_back(std::move(bits));
}

BinaryContext BinaryContext::from_transactions(const std::vector<std::vector<std::uint32_t>>& rows) {
  BinaryContext ctx;
  ctx.n_rows_ = rows.size();
  ctx.n_blocks_ = (rows.size() + 63) / 64;
  std::set<std::uint32_t> ids;
  for (const auto& row : rows) ids.insert(row.begin(), row.end());
  for (std::uint32_t id : ids) {
    std::vector<bool> cells(rows.size(), false);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (std::find(rows[r].begin(), rows[r].end(), id) != rows[r].end()) cells[r] = true;
    ctx.add_column(id, cells);
  }
  return ctx;
}

bool BinaryContext::cell(std::size_t row, std::size_t column) const {
  return (columns_.at(column).at(row / 64) >> (row % 64)) & 1ULL;
}

std::uint64_t BinaryContext::support_count(std::span<const std::uint32_t> columns) const {
  if (columns.empty()) return n_rows_;
  std::uint64_t count = 0;
  for (std::size_t b = 0; b < n_blocks_; ++b) {
    std::uint64_t word = columns_.at(columns[0]).at(b);
    for (std::size_t i = 1; i < columns.size() && word; ++i) word &= columns_.at(columns[i]).at(b);
    count += static_cast<std::uint64_t>(std::popcount(word));
  }
  return count;
}

double avg_access(const AccessHistory& history, FileId file) {
  std::uint64_t sum = 0;
  std::uint64_t requesters = 0;
  for (const auto& [job, counts] : history.rows()) {
    const std::uint32_t c = counts.at(file);
    if (c > 0) {
      sum += c;
      requesters += 1;
    }
  }
  if (requesters == 0) return 0.0;
  return static_cast<double>(sum) / static_cast<double>(requesters);
}

BinaryContext to_binary_context(const AccessHistory& history) {
  BinaryContext ctx;
  const auto& rows = history.rows();
  ctx.n_rows_ = rows.size();
  ctx.n_blocks_ = (rows.size() + 63) / 64;
  for (FileId file = 0; file < history.file_count(); ++file) {
    std::uint64_t sum = 0;
    std::uint64_t requesters = 0;
    for (const auto& [job, counts] : rows) {
      if (counts[file] > 0) {
        sum += counts[file];
        requesters += 1;
      }
    }
    if (requesters == 0) continue;  // never requested: an all-false column carries no pattern
    std::vector<bool> cells;
    cells.reserve(rows.size());
    // count >= sum/requesters, compared as count*requesters >= sum to stay exact
    for (const auto& [job, counts] : rows)
      cells.push_back(static_cast<std::uint64_t>(counts[file]) * requesters >= sum);
    ctx.add_column(file, cells);
  }
  return ctx;
}

double support(std::span<const std::uint32_t> columns, const BinaryContext& context) {
  if (context.transaction_count() == 0)
    throw std::invalid_argument("support undefined on a context with no transactions");
  return static_cast<double>(context.support_count(columns)) /
         static_cast<double>(context.transaction_count());
}

double all_confidence(std::span<const std::uint32_t> columns, const BinaryContext& context) {
  if (columns.empty()) throw std::invalid_argument("all-confidence undefined for the empty pattern");
  std::uint64_t almax = 0;
  for (std::uint32_t c : columns) almax = std::max(almax, context.item_support_count(c));
  if (almax == 0) return 0.0;
  return static_cast<double>(context.support_count(columns)) / static_cast<double>(almax);
}

namespace {

Pattern make_pattern(std::vector<std::uint32_t> items, const BinaryContext& context) {
  Pattern p;
  p.support_count = context.support_count(items);
  p.total_transactions = context.transaction_count();
  for (std::uint32_t c : items) p.almax_count = std::max(p.almax_count, context.item_support_count(c));
  p.items = std::move(items);
  return p;
}

}  // namespace

std::vector<Pattern> generate_next_fcp(const std::vector<Pattern>& fcp_k,
                                       const MiningThresholds& thresholds,
                                       const BinaryContext& context,
                                       std::size_t candidate_limit) {
  std::vector<Pattern> next;
  if (fcp_k.empty()) return next;
  const std::size_t k = fcp_k.front().items.size();

  std::set<std::vector<std::uint32_t>> members;
  for (const auto& p : fcp_k) members.insert(p.items);

  // Apriori-Gen: join patterns sharing a (k-1)-prefix; items stay sorted.
  std::vector<std::vector<std::uint32_t>> candidates;
  for (std::size_t i = 0; i < fcp_k.size(); ++i) {
    for (std::size_t j = i + 1; j < fcp_k.size(); ++j) {
      const auto& a = fcp_k[i].items;
      const auto& b = fcp_k[j].items;
      if (!std::equal(a.begin(), a.end() - 1, b.begin())) continue;
      if (a.back() >= b.back()) continue;
      std::vector<std::uint32_t> cand(a);
      cand.push_back(b.back());
      candidates.push_back(std::move(cand));
      if (candidates.size() > candidate_limit)
        throw MiningLimitError("candidate budget exceeded at level " + std::to_string(k + 1) +
                               " (limit " + std::to_string(candidate_limit) + ")");
    }
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::uint32_t> subset(k);
  for (auto& cand : candidates) {
    // cross-support: some item pair has a support ratio below the threshold
    std::uint64_t min_item = UINT64_MAX, max_item = 0;
    for (std::uint32_t c : cand) {
      const std::uint64_t s = context.item_support_count(c);
      min_item = std::min(min_item, s);
      max_item = std::max(max_item, s);
    }
    if (thresholds.min_all_confidence.exceeds(min_item, max_item)) continue;

    // anti-monotony: every k-subset must have survived the previous level
    bool all_subsets_present = true;
    for (std::size_t drop = 0; drop < cand.size() && all_subsets_present; ++drop) {
      subset.clear();
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (i != drop) subset.push_back(cand[i]);
      if (!members.count(subset)) all_subsets_present = false;
    }
    if (!all_subsets_present) continue;

    Pattern p = make_pattern(std::move(cand), context);
    if (!thresholds.minsupp.met_by(p.support_count, p.total_transactions)) continue;
    if (thresholds.min_all_confidence.exceeds(p.support_count, p.almax_count)) continue;
    next.push_back(std::move(p));
  }
  return next;
}

std::vector<Pattern> mine_mfcp(const BinaryContext& context, const MiningThresholds& thresholds,
                               std::size_t candidate_limit) {
  std::vector<Pattern> result;
  if (context.transaction_count() == 0 || context.item_count() == 0) return result;

  std::vector<Pattern> level;
  for (std::uint32_t c = 0; c < context.item_count(); ++c) {
    if (thresholds.minsupp.met_by(context.item_support_count(c), context.transaction_count()))
      level.push_back(make_pattern({c}, context));
  }

  // mfcp keyed by items for the superset-removal step; values keep the stats
  std::map<std::vector<std::uint32_t>, Pattern> mfcp;
  for (const auto& p : level) mfcp.emplace(p.items, p);

  std::vector<std::uint32_t> subset;
  while (!level.empty()) {
    std::vector<Pattern> next = generate_next_fcp(level, thresholds, context, candidate_limit);
    for (const auto& p : next) {
      for (std::size_t drop = 0; drop < p.items.size(); ++drop) {
        subset.clear();
        for (std::size_t i = 0; i < p.items.size(); ++i)
          if (i != drop) subset.push_back(p.items[i]);
        mfcp.erase(subset);
      }
    }
    for (const auto& p : next) mfcp.emplace(p.items, p);
    level = std::move(next);
  }

  result.reserve(mfcp.size());
  for (auto& [items, p] : mfcp) result.push_back(std::move(p));
  std::sort(result.begin(), result.end(), [](const Pattern& a, const Pattern& b) {
    if (a.items.size() != b.items.size()) return a.items.size() > b.items.size();
    return a.items < b.items;
  });
  return result;
}

}  // namespace gridsim
