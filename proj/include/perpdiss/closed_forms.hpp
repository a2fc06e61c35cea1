#pragma once

#include "perpdiss/exact_math.hpp"
#include "perpdiss/gain_graph.hpp"
#include "perpdiss/lift_semilattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace perpdiss {

struct ProjectiveCounts {
  std::vector<std::optional<Integer>> f;  // nullopt where k <= dim of the common intersection
  std::vector<Integer> a;
};

struct CountReport {
  int d = 0;
  std::vector<Integer> f, b, a;  // indexed by face dimension 0..d
  Polynomial p;
  std::vector<int> b_unreliable;  // dimensions k whose b_k the formula does not determine
  bool degenerate = false;        // a zero loop makes the whole space a hyperplane
  std::optional<ProjectiveCounts> projective;

  Integer regions() const { return degenerate ? Integer(0) : f[d]; }
  friend bool operator==(const CountReport& x, const CountReport& y) {
    return x.d == y.d && x.f == y.f && x.b == y.b && x.a == y.a && x.p == y.p;
  }
};

// f_k = sum_j |w_{d-k,j}|, b_k = |sum_j w_{d-k,j}|, a_k = W_{d-k}, p = sum_{j<=d} w_j lambda^(d-j).
CountReport counts_from_table(const WhitneyTable& t, int d);
CountReport counts_from_whitney(const WhitneyTable& t, int d, int n);

ProjectiveCounts projective_counts(const LiftLattice& l, int d);

CountReport stirling_counts(int n, int d);

// F[l] = number of spanning forests of the underlying graph with l components.
std::vector<Integer> forest_numbers(const GainGraph& g);
CountReport forest_counts(const GainGraph& g, int d);

CountReport planar_counts(const Integer& q, const Integer& s2, const Integer& t);

struct ChiPair {
  Polynomial chi_b, chi_lift;
};
ChiPair composed_partition_chi(int n, int k);

Polynomial no_bisector_chi(int n, int k, int order = 8);
// chi^b of [-k,k]K_n rebuilt from the no-bisector series by Stirling inversion.
Polynomial composed_chi_via_egf(int n, int k, int order = 8);

struct EvenCase {
  Polynomial p0, p;  // chi^b / lambda with and without the bisectors
};
EvenCase even_case_chi(int n, int k);

struct FatForestWhitney {
  std::vector<Integer> w;  // w[r] for rank r = 0..n-1
  std::vector<Integer> W;
  Integer W_top;
};
FatForestWhitney fat_forest_whitney(int n, int M);

// F_{n-i}(mK_n), spanning forests with n-i components.
Integer renyi_forest_count(int n, int i, int m = 1);

struct FamilySpec {
  std::string name;
  int n = 0;
  int k = 1;  // odd, even, no_bisector
  int M = 1;  // fat
  int m = 2;  // contrabalanced multiplicity
  std::vector<Rational> weights;  // power_diagram; random when empty
  std::uint64_t seed = 1;
};
GainGraph make_family(const FamilySpec& spec);

}  // namespace perpdiss
