#pragma once

#include "perpdiss/closed_forms.hpp"
#include "perpdiss/exact_math.hpp"
#include "perpdiss/gain_graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace perpdiss {

struct SamplingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Point = std::vector<Rational>;

struct PointConfiguration {
  int d = 0;
  std::vector<Point> points;  // Q_1..Q_n at index 0..n-1
  int n() const { return static_cast<int>(points.size()); }
  const Point& operator()(int v) const { return points[v - 1]; }
};

struct Hyperplane {
  std::vector<Rational> normal;  // normal . x = offset
  Rational offset;
  EdgeId source_edge = 0;
};

// Solution set of a consistent system [A | b] kept in canonical RREF.
class AffineFlat {
 public:
  static AffineFlat whole(int d);
  static std::optional<AffineFlat> from_rows(int d, const std::vector<std::vector<Rational>>& rows);

  int ambient() const { return d_; }
  int dim() const { return d_ - static_cast<int>(rows_.size()); }
  int codim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }  // width d+1

  bool contained_in(const Hyperplane& h) const;
  bool contains(const Point& p) const;
  std::optional<AffineFlat> meet(const Hyperplane& h) const;
  std::optional<AffineFlat> meet(const AffineFlat& other) const;
  std::optional<Point> as_point() const;  // when dim() == 0
  Point some_point() const;               // free coordinates set to 0

  std::vector<std::size_t> containing_hyperplanes;  // filled by intersection_semilattice

  friend bool operator==(const AffineFlat& a, const AffineFlat& b) { return a.d_ == b.d_ && a.rows_ == b.rows_; }
  friend bool operator<(const AffineFlat& a, const AffineFlat& b) {
    return a.codim() != b.codim() ? a.codim() < b.codim() : a.rows_ < b.rows_;
  }

 private:
  int d_ = 0;
  std::vector<std::vector<Rational>> rows_;
};

struct GeomSemilattice {
  int d = 0;
  std::vector<AffineFlat> flats;  // by codimension, whole space first
};

Rational pythagorean_coordinate(const Point& p, const Point& qi, const Point& qj);

// One hyperplane per non-loop edge; zero loops (the whole space) are skipped.
std::vector<Hyperplane> build_arrangement(const GainGraph& g, const PointConfiguration& q);

GeomSemilattice intersection_semilattice(const std::vector<Hyperplane>& h, int d);
CountReport geometric_counts(const GeomSemilattice& l, int d);

struct Census {
  Integer f0, f1, f2;
};
Census planar_census(const std::vector<Hyperplane>& h);

struct IgpResult {
  bool ok = false;
  std::vector<std::pair<int, int>> witness;  // direction vectors Q_j - Q_i of a bad set
};
IgpResult check_igp(const PointConfiguration& q);

struct GpResult {
  bool ok = false;
  std::string certificate;
};
BalanceMode mode_for_alpha(const Rational& alpha);
GpResult check_gp(const GainGraph& g, const PointConfiguration& q);

struct SampleOptions {
  std::uint64_t seed = 1;
  long bound = 1'000'000;
  int retries = 100;
};
PointConfiguration sample_generic(const GainGraph& g, int d, const SampleOptions& opt = {});

struct InducedArrangement {
  GainGraph graph;                     // switched by eta, collapsed by the projection classes
  PointConfiguration points;           // projections, in ambient coordinates (they lie in t)
  SwitchingFunction eta;               // squared distances to t
  Partition blocks;
  std::vector<AffineFlat> traces;      // h(e) meet t for each edge of graph, in graph edge order
  bool verified = false;
};
InducedArrangement induced_arrangement(const GainGraph& g, const PointConfiguration& q, const AffineFlat& t);
Point project(const Point& p, const AffineFlat& t);

struct CrossSection {
  PointConfiguration qprime;
  AffineFlat t;
  bool verified = false;
};
CrossSection cross_section_embed(const GainGraph& g, const PointConfiguration& q, std::uint64_t seed = 1);

struct ParaboloidResult {
  SwitchingFunction eta;
  bool verified = false;
};
ParaboloidResult paraboloid_roundtrip(const GainGraph& g, const PointConfiguration& q);

std::string render_svg(const GainGraph& g, const PointConfiguration& q);

}  // namespace perpdiss
