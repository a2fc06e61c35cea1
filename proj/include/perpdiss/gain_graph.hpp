#pragma once

#include "perpdiss/exact_math.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace perpdiss {

using EdgeId = std::size_t;
using EdgeIdSet = std::vector<EdgeId>;  // sorted, no duplicates

struct Edge {
  EdgeId id = 0;
  int i = 0, j = 0;  // i <= j, vertices 1..n
  Rational gain;     // phi(e; i, j)
  bool is_loop() const { return i == j; }
};

// Vertex-indexed rational values; vertex v lives at values[v - 1].
struct SwitchingFunction {
  std::vector<Rational> values;
  const Rational& operator()(int v) const { return values[v - 1]; }
  Rational& operator()(int v) { return values[v - 1]; }
};
using Potential = SwitchingFunction;

// Canonical: blocks sorted internally, ordered by least element.
struct Partition {
  std::vector<std::vector<int>> blocks;
  static Partition discrete(int n);
  static Partition from_labels(const std::vector<int>& label_of_vertex);  // index v-1
  std::vector<int> block_index(int n) const;                             // index v-1 -> block
  friend bool operator==(const Partition&, const Partition&) = default;
};

enum class BalanceMode { Exact, ZOnly };

class GainGraph {
 public:
  explicit GainGraph(int n = 0, Rational alpha = 0);

  // Returns the id, or nullopt when a nonzero loop is discarded.  Without an explicit
  // id, edges are numbered in insertion order (discarded loops still consume an id).
  std::optional<EdgeId> add_edge(int i, int j, const Rational& gain,
                                 std::optional<EdgeId> id = std::nullopt);

  int n() const { return n_; }
  const Rational& alpha() const { return alpha_; }
  void set_alpha(const Rational& a) { alpha_ = a; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const;
  bool has_edge(EdgeId id) const { return index_.count(id) != 0; }
  EdgeIdSet edge_ids() const;
  // phi(e; from, to), negated when read against the stored orientation.
  Rational gain(EdgeId id, int from, int to) const;
  bool has_degenerate_loop() const;

 private:
  int n_;
  Rational alpha_;
  std::vector<Edge> edges_;
  std::unordered_map<EdgeId, std::size_t> index_;
  EdgeId next_id_ = 0;
};

struct BalanceResult {
  bool balanced = false;
  std::optional<Potential> potential;  // Exact mode only
};

// Exact: phi(e;i,j) = theta(i) - theta(j) on S, least vertex of each component at 0.
// ZOnly: every circle of S lies in the zero-gain set.
BalanceResult is_balanced(const GainGraph& g, const EdgeIdSet& s, BalanceMode mode);

// Vertex partition cut out by the components of (V, S).
Partition components(const GainGraph& g, const EdgeIdSet& s);

GainGraph switch_gains(const GainGraph& g, const SwitchingFunction& eta);

struct Contraction {
  GainGraph graph;
  Partition blocks;        // block b becomes vertex b+1
  SwitchingFunction eta;   // switching that zeroes S
};
Contraction contract(const GainGraph& g, const EdgeIdSet& s);

GainGraph collapse(const GainGraph& g, const Partition& pi);

EdgeIdSet zero_set(const GainGraph& g);

struct PlanarStatistics {
  Integer q, s2, t, t0;
};
PlanarStatistics planar_statistics(const GainGraph& g);

// True when some circle is balanced; with outside_zero, only circles not contained
// in the zero-gain set count.  Parallel pairs are circles of length 2.
bool has_balanced_circle(const GainGraph& g, bool outside_zero = false);

}  // namespace perpdiss
