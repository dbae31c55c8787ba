#include "caconn/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "caconn/errors.hpp"

namespace caconn {

ColoredMatroid::ColoredMatroid(std::vector<Color> colors,
                               IndependenceOracle oracle)
    : colors_(std::move(colors)), oracle_(std::move(oracle)) {
  for (Color c : colors_) {
    if (c < 0) throw std::invalid_argument("negative element color");
  }
  if (!oracle_) throw std::invalid_argument("missing independence oracle");
}

ColoredMatroid::ColoredMatroid(const ColoredMatroid& other)
    : colors_(other.colors_),
      oracle_(other.oracle_),
      calls_(other.calls_.load()) {}

ColoredMatroid& ColoredMatroid::operator=(const ColoredMatroid& other) {
  colors_ = other.colors_;
  oracle_ = other.oracle_;
  calls_.store(other.calls_.load());
  return *this;
}

std::vector<Color> ColoredMatroid::used_colors() const {
  std::set<Color> used(colors_.begin(), colors_.end());
  return std::vector<Color>(used.begin(), used.end());
}

bool ColoredMatroid::independent(const std::vector<int>& elements) const {
  calls_.fetch_add(1, std::memory_order_relaxed);
  return oracle_(elements);
}

ColoredMatroid graphic_matroid(const EdgeColoredGraph& g) {
  std::vector<Color> colors;
  colors.reserve(g.edge_count());
  std::vector<std::pair<int, int>> endpoints;
  endpoints.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    colors.push_back(e.color);
    endpoints.emplace_back(e.u, e.v);
  }
  int n = g.vertex_count();
  auto oracle = [n, endpoints = std::move(endpoints)](
                    const std::vector<int>& elements) {
    DisjointSetUnion dsu(n);
    for (int e : elements) {
      if (!dsu.unite(endpoints[e].first, endpoints[e].second)) return false;
    }
    return true;
  };
  return ColoredMatroid(std::move(colors), std::move(oracle));
}

ColoredMatroid uniform_matroid(int threshold, std::vector<Color> colors) {
  if (threshold < 0) throw std::invalid_argument("negative threshold");
  auto oracle = [threshold](const std::vector<int>& elements) {
    return static_cast<int>(elements.size()) <= threshold;
  };
  return ColoredMatroid(std::move(colors), std::move(oracle));
}

namespace {

// Extends the independent set in place with every candidate (taken in the
// given order) that keeps it independent; returns the added elements.
std::vector<int> greedy_extend(const ColoredMatroid& m,
                               std::vector<int>& independent,
                               const std::vector<int>& candidates) {
  std::vector<int> added;
  for (int e : candidates) {
    independent.push_back(e);
    if (m.independent(independent)) {
      added.push_back(e);
    } else {
      independent.pop_back();
    }
  }
  return added;
}

std::vector<int> default_or_validated_order(const std::vector<int>& order,
                                            int n, bool descending) {
  if (order.empty()) {
    std::vector<int> result(n);
    std::iota(result.begin(), result.end(), 0);
    if (descending) std::reverse(result.begin(), result.end());
    return result;
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("order has wrong length");
  }
  std::vector<char> seen(n, 0);
  for (int e : order) {
    if (e < 0 || e >= n || seen[e]) {
      throw std::invalid_argument("order is not a permutation");
    }
    seen[e] = 1;
  }
  return order;
}

}  // namespace

int subset_rank(const ColoredMatroid& m, const std::vector<int>& x) {
  std::vector<int> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> independent;
  greedy_extend(m, independent, sorted);
  return static_cast<int>(independent.size());
}

int total_rank(const ColoredMatroid& m) {
  std::vector<int> all(m.ground_size());
  std::iota(all.begin(), all.end(), 0);
  return subset_rank(m, all);
}

std::optional<Color> courteous_violation(const ColoredMatroid& m) {
  const int rank = total_rank(m);
  for (Color c : m.used_colors()) {
    std::vector<int> rest;
    for (int e = 0; e < m.ground_size(); ++e) {
      if (m.color_of(e) != c) rest.push_back(e);
    }
    if (subset_rank(m, rest) != rank) return c;
  }
  return std::nullopt;
}

bool is_courteous(const ColoredMatroid& m) {
  return !courteous_violation(m).has_value();
}

bool uniform_is_courteous(int n, int threshold,
                          const std::vector<Color>& colors) {
  if (static_cast<int>(colors.size()) != n) {
    throw std::invalid_argument("color array has wrong length");
  }
  int max_multiplicity = 0;
  std::map<Color, int> counts;
  for (Color c : colors) {
    max_multiplicity = std::max(max_multiplicity, ++counts[c]);
  }
  return max_multiplicity <= n - threshold;
}

namespace {

// IncreaseRank over the elements passing `allowed`. t must already satisfy
// allowed. Returns t's superset with the rank of the allowed ground set.
std::vector<int> increase_rank_impl(const ColoredMatroid& m,
                                    const std::vector<int>& t,
                                    const std::vector<int>& order,
                                    IncreaseRankVariant variant,
                                    const std::vector<char>& allowed) {
  std::vector<int> t_sorted = t;
  std::sort(t_sorted.begin(), t_sorted.end());
  std::vector<char> in_t(m.ground_size(), 0);
  for (int e : t_sorted) in_t[e] = 1;

  std::vector<int> result = t_sorted;
  std::vector<int> independent;
  if (variant == IncreaseRankVariant::weighted_greedy) {
    // Weight 0 on t, weight 1 elsewhere: scan t first, then the rest.
    greedy_extend(m, independent, t_sorted);
    std::vector<int> rest;
    for (int e : order) {
      if (!in_t[e] && allowed[e]) rest.push_back(e);
    }
    std::vector<int> added = greedy_extend(m, independent, rest);
    result.insert(result.end(), added.begin(), added.end());
  } else {
    greedy_extend(m, independent, t_sorted);
    for (int e : order) {
      if (in_t[e] || !allowed[e]) continue;
      independent.push_back(e);
      if (m.independent(independent)) {
        result.push_back(e);
      } else {
        independent.pop_back();
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

std::vector<int> increase_rank(const ColoredMatroid& m,
                               const std::vector<int>& t,
                               const std::vector<int>& element_order,
                               IncreaseRankVariant variant) {
  auto order = default_or_validated_order(element_order, m.ground_size(),
                                          /*descending=*/false);
  std::vector<char> allowed(m.ground_size(), 1);
  return increase_rank_impl(m, t, order, variant, allowed);
}

RestrictionResult courteous_restriction(const ColoredMatroid& m,
                                        const std::vector<int>& element_order,
                                        const std::vector<int>& color_order,
                                        IncreaseRankVariant variant) {
  if (m.ground_size() == 0) {
    throw precondition_error("courteous_restriction needs a nonempty ground set");
  }
  const long long calls_before = m.oracle_calls();
  if (auto bad = courteous_violation(m)) {
    throw precondition_error(
        "matroid is not courteously colored: deleting color " +
            std::to_string(*bad) + " drops the rank",
        *bad);
  }
  auto order = default_or_validated_order(element_order, m.ground_size(),
                                          /*descending=*/false);
  std::vector<Color> colors =
      color_order.empty() ? m.used_colors() : color_order;
  // A custom color order may only reorder; dropping a used color would void
  // the courteousness of the output.
  for (Color c : m.used_colors()) {
    if (std::find(colors.begin(), colors.end(), c) == colors.end()) {
      throw std::invalid_argument("color order misses used color " +
                                  std::to_string(c));
    }
  }

  const int rank_total = total_rank(m);
  RestrictionResult result;
  std::vector<char> selected(m.ground_size(), 0);

  std::vector<int> basis;
  greedy_extend(m, basis, order);
  for (int e : basis) {
    selected[e] = 1;
    result.provenance.push_back({e, SelectionPhase::basis, -1});
  }

  for (Color c : colors) {
    std::vector<int> without_c;
    for (int e = 0; e < m.ground_size(); ++e) {
      if (selected[e] && m.color_of(e) != c) without_c.push_back(e);
    }
    if (subset_rank(m, without_c) == rank_total) continue;
    std::vector<char> allowed(m.ground_size(), 0);
    for (int e = 0; e < m.ground_size(); ++e) allowed[e] = m.color_of(e) != c;
    std::vector<int> repaired =
        increase_rank_impl(m, without_c, order, variant, allowed);
    for (int e : repaired) {
      if (!selected[e]) {
        selected[e] = 1;
        result.provenance.push_back({e, SelectionPhase::repair, c});
      }
    }
  }

  for (int e = 0; e < m.ground_size(); ++e) {
    if (selected[e]) result.selected.push_back(e);
  }
  result.oracle_calls = m.oracle_calls() - calls_before;
  return result;
}

namespace {

// Whether the restriction of m to t is courteous and rank-preserving.
bool restriction_good(const ColoredMatroid& m, const std::vector<int>& t,
                      int rank_total) {
  if (subset_rank(m, t) != rank_total) return false;
  std::set<Color> used;
  for (int e : t) used.insert(m.color_of(e));
  for (Color c : used) {
    std::vector<int> rest;
    for (int e : t) {
      if (m.color_of(e) != c) rest.push_back(e);
    }
    if (subset_rank(m, rest) != rank_total) return false;
  }
  return true;
}

// Once an element's removal breaks the property it stays unremovable under
// further deletions, so one pass yields a deletion-minimal set.
std::vector<int> greedy_delete(const ColoredMatroid& m,
                               std::vector<char> keep, int rank_total,
                               const std::vector<int>& order) {
  for (int e : order) {
    if (!keep[e]) continue;
    keep[e] = 0;
    std::vector<int> rest;
    for (int x = 0; x < m.ground_size(); ++x) {
      if (keep[x]) rest.push_back(x);
    }
    if (!restriction_good(m, rest, rank_total)) keep[e] = 1;
  }
  std::vector<int> result;
  for (int e = 0; e < m.ground_size(); ++e) {
    if (keep[e]) result.push_back(e);
  }
  return result;
}

}  // namespace

std::vector<int> prune_restriction(const ColoredMatroid& m,
                                   const std::vector<int>& selected,
                                   const std::vector<int>& element_order) {
  auto order = default_or_validated_order(element_order, m.ground_size(),
                                          /*descending=*/true);
  const int rank_total = total_rank(m);
  if (!restriction_good(m, selected, rank_total)) {
    throw precondition_error(
        "selection is not a courteous rank-preserving restriction");
  }
  std::vector<char> keep(m.ground_size(), 0);
  for (int e : selected) keep[e] = 1;
  return greedy_delete(m, std::move(keep), rank_total, order);
}

std::vector<int> greedy_minimal_restriction(
    const ColoredMatroid& m, const std::vector<int>& element_order) {
  if (auto bad = courteous_violation(m)) {
    throw precondition_error(
        "matroid is not courteously colored: deleting color " +
            std::to_string(*bad) + " drops the rank",
        *bad);
  }
  auto order = default_or_validated_order(element_order, m.ground_size(),
                                          /*descending=*/true);
  return greedy_delete(m, std::vector<char>(m.ground_size(), 1),
                       total_rank(m), order);
}

long long min_elements_bound(int color_count, int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  if (rank == 0) return 0;
  if (color_count < 2) {
    throw std::invalid_argument(
        "a courteously colored matroid of positive rank needs at least 2 "
        "colors");
  }
  long long k = color_count;
  long long r = rank;
  return (k * r + k - 2) / (k - 1);
}

}  // namespace caconn
