#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <vector>

#include "caconn/graph.hpp"

namespace caconn {

// Answers whether a set of ground-set elements (distinct, any order) is
// independent.
using IndependenceOracle = std::function<bool(const std::vector<int>&)>;

// A matroid over ground set [0, |colors|) given by an independence oracle,
// with a color per element. The oracle is trusted to satisfy the independence
// axioms; tests validate them exhaustively on small instances. Shareable
// read-only across threads when the oracle itself is thread-safe.
class ColoredMatroid {
 public:
  ColoredMatroid(std::vector<Color> colors, IndependenceOracle oracle);
  ColoredMatroid(const ColoredMatroid& other);
  ColoredMatroid& operator=(const ColoredMatroid& other);

  int ground_size() const { return static_cast<int>(colors_.size()); }
  Color color_of(int element) const { return colors_[element]; }
  const std::vector<Color>& colors() const { return colors_; }
  std::vector<Color> used_colors() const;  // sorted, distinct

  bool independent(const std::vector<int>& elements) const;
  long long oracle_calls() const { return calls_.load(); }
  void reset_oracle_calls() const { calls_.store(0); }

 private:
  std::vector<Color> colors_;
  IndependenceOracle oracle_;
  mutable std::atomic<long long> calls_{0};
};

// Independence = the edge set is a forest; elements are g's edge indices.
ColoredMatroid graphic_matroid(const EdgeColoredGraph& g);

// Independence = cardinality at most threshold.
ColoredMatroid uniform_matroid(int threshold, std::vector<Color> colors);

// Size of a maximal independent subset of x, built greedily in ascending
// element order with O(|x|) oracle calls.
int subset_rank(const ColoredMatroid& m, const std::vector<int>& x);
int total_rank(const ColoredMatroid& m);

// Deleting the elements of any single used color keeps the rank unchanged.
bool is_courteous(const ColoredMatroid& m);
// Smallest used color whose deletion drops the rank, if any.
std::optional<Color> courteous_violation(const ColoredMatroid& m);

// Closed form for uniform matroids: courteous iff no color is assigned to
// more than n - threshold elements.
bool uniform_is_courteous(int n, int threshold, const std::vector<Color>& colors);

enum class IncreaseRankVariant {
  // Minimum-weight basis with weight 0 on t, 1 elsewhere; O(|S|) oracle
  // calls and |result| = |t| + r(S) - r(t).
  weighted_greedy,
  // Scan the ground set and take every element that raises the rank of the
  // running set.
  simple_scan,
};

// Superset t' of t with r(t') = r(S). Empty element_order means ascending.
std::vector<int> increase_rank(
    const ColoredMatroid& m, const std::vector<int>& t,
    const std::vector<int>& element_order = {},
    IncreaseRankVariant variant = IncreaseRankVariant::weighted_greedy);

enum class SelectionPhase { basis, repair, kept_after_prune };

struct SelectedElement {
  int element = -1;
  SelectionPhase phase = SelectionPhase::basis;
  Color repair_color = -1;  // set for SelectionPhase::repair
};

struct RestrictionResult {
  std::vector<int> selected;  // ascending
  std::vector<SelectedElement> provenance;  // in selection order
  long long oracle_calls = 0;
};

// Picks a basis, then per color repairs the rank of the selection with
// elements of other colors until deleting any single color is harmless.
// Output is a courteously colored rank-preserving restriction of at most
// 2 r(S) elements. Requires a courteously colored matroid with a nonempty
// ground set; rejects others with the violating color.
RestrictionResult courteous_restriction(
    const ColoredMatroid& m, const std::vector<int>& element_order = {},
    const std::vector<int>& color_order = {},
    IncreaseRankVariant variant = IncreaseRankVariant::weighted_greedy);

// Greedily drops elements of `selected` whose removal keeps the restriction
// courteous and rank-preserving; the result is deletion-minimal. Empty order
// means descending element index.
std::vector<int> prune_restriction(const ColoredMatroid& m,
                                   const std::vector<int>& selected,
                                   const std::vector<int>& element_order = {});

// Single-pass greedy deletion over the whole ground set; same guarantees and
// worst-case ratio as courteous_restriction, O(|C| * |S|^2) oracle calls.
std::vector<int> greedy_minimal_restriction(
    const ColoredMatroid& m, const std::vector<int>& element_order = {});

// Minimum ground-set size of a courteously colored matroid with exactly
// color_count colors and the given rank: 0 when rank = 0, otherwise
// ceil(color_count * rank / (color_count - 1)). Rejects color_count < 2 for
// positive rank (no such matroid exists).
long long min_elements_bound(int color_count, int rank);

}  // namespace caconn
