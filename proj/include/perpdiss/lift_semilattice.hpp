#pragma once

#include "perpdiss/exact_math.hpp"
#include "perpdiss/gain_graph.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace perpdiss {

// Thrown when an enumeration would exceed its guard.
struct ResourceGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kForestGuard = 2'000'000;
inline constexpr std::size_t kPosetGuard = 100'000;

struct Flat {
  EdgeIdSet edge_ids;
  Partition partition;
  int rank = 0;
  Potential potential;  // Exact mode; empty in ZOnly
};

struct Semilattice {
  std::vector<Flat> elements;  // sorted by (rank, edge_ids)
  BalanceMode mode = BalanceMode::Exact;
  int cap = 0;
};

// A ranked poset ordered by containment of sorted "support" sets.  Both the
// combinatorial lattices and geometric intersection posets reduce to this.
struct RankedPoset {
  std::vector<int> rank;
  std::vector<EdgeIdSet> support;
  // x <= y iff support[x] is a subset of support[y] and rank[x] <= rank[y].
};

struct LiftElement {
  EdgeIdSet edges;
  bool has_e0 = false;
  int rank = 0;
  bool truncated_top = false;
};

struct LiftLattice {
  Semilattice balanced;
  std::vector<LiftElement> elements;  // by rank; balanced before e0 elements within a rank
  int cap = 0;
  int full_rank = 0;  // rank before truncation
};

struct WhitneyTable {
  int rank = 0;
  // mobius[x] lists (y, mu(x,y)) for every y >= x.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> mobius;
  std::vector<Integer> w, W;
  std::map<std::pair<int, int>, Integer> w2;
  Integer w2_at(int i, int j) const;
};

EdgeIdSet closure(const GainGraph& g, const EdgeIdSet& s, BalanceMode mode);

// Closed balanced sets of rank <= cap, by closures of forests.
Semilattice enumerate_flats(const GainGraph& g, BalanceMode mode, int cap);

LiftLattice lift_lattice(const GainGraph& g, BalanceMode mode, int cap);

RankedPoset as_poset(const Semilattice& l);
RankedPoset as_poset(const LiftLattice& l);

WhitneyTable mobius_table(const RankedPoset& p);
WhitneyTable mobius_table(const Semilattice& l);
WhitneyTable mobius_table(const LiftLattice& l);

struct LatticePolynomials {
  Polynomial chi_b;
  BivariatePolynomial w_poly;
};
// chi = sum_j w_j lambda^(n-j); w(x, lambda) = sum w_ij x^i lambda^(n-j).
LatticePolynomials polynomials(const WhitneyTable& t, int n);

// Characteristic polynomial of a lattice with top rank r: sum_j w_j lambda^(r-j).
Polynomial characteristic_polynomial(const WhitneyTable& t);

}  // namespace perpdiss
