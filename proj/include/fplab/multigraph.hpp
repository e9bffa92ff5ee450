#ifndef FPLAB_MULTIGRAPH_HPP
#define FPLAB_MULTIGRAPH_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "fplab/fixed_point_data.hpp"
#include "fplab/verdict.hpp"

namespace fplab {

struct FewerThanTwoPositive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MultigraphEdge {
  int from = 0;  // indices into the data's point list
  int to = 0;
  std::int64_t weight = 0;

  // canonical edge order: by label first
  auto operator<=>(const MultigraphEdge& o) const {
    return std::tie(weight, from, to) <=> std::tie(o.weight, o.from, o.to);
  }
  bool operator==(const MultigraphEdge& o) const {
    return weight == o.weight && from == o.from && to == o.to;
  }
};

/// Labelled directed multigraph over the fixed points. Edges are kept
/// sorted by (weight, from, to); parallel edges repeat.
struct Multigraph {
  std::vector<std::string> vertices;
  std::vector<MultigraphEdge> edges;

  bool operator==(const Multigraph& o) const { return edges == o.edges; }
};

/// The second smallest positive weight counted with multiplicity over all
/// points (the two smallest may coincide). Throws FewerThanTwoPositive when
/// fewer than two positive occurrences exist.
std::int64_t small_weight_threshold(const FixedPointData& d);

/// All loop-free multigraphs (as multisets of edges) pairing each +w
/// occurrence with a -w occurrence such that
///   - edges with w <= threshold step the negative-weight count by +1,
///   - edges with w >  threshold join points whose weight multisets are
///     congruent mod w,
///   - no edge is a loop.
/// Requires balanced data; the list is sorted canonically. With fewer than
/// two positive occurrences every edge falls under the stepping clause.
std::vector<Multigraph> enumerate_admissible(const FixedPointData& d);

/// True iff enumerate_admissible would be nonempty; short-circuits.
bool has_admissible(const FixedPointData& d);

/// Pass iff an admissible multigraph exists; the certificate names the
/// weight value at which every pairing attempt violates a clause.
FilterVerdict multigraph_check(const FixedPointData& d);

/// Graphviz digraph text, deterministic; edge labels are the weights.
std::string to_dot(const Multigraph& g);

}  // namespace fplab

#endif
