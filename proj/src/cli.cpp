#include "perpdiss/cli.hpp"

#include "perpdiss/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace perpdiss {

namespace {

struct RunConfig {
  std::string graph, points, out, format, alpha;
  std::string name;
  int dim = 0, n = 0, k = 1, M = 1, m = 2;
  std::uint64_t seed = 1;
  bool seed_given = false;
  long bound = 1'000'000;
  int retries = 100;
};

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + c.out);
  f << text;
}

GainGraph load_graph(const RunConfig& c) {
  GainGraph g = read_graph(c.graph);
  if (!c.alpha.empty()) {
    try {
      g.set_alpha(parse_rational(c.alpha));
    } catch (const std::invalid_argument& ex) {
      throw InputError(ex.what());
    }
  }
  return g;
}

struct WhitneyPath {
  WhitneyTable table;
  CountReport report;
  bool complete = false;  // table covers the whole semilattice
};

WhitneyPath whitney_path(const GainGraph& g, int d) {
  const int cap = std::min(d, std::max(g.n() - 1, 0));
  Semilattice flats = enumerate_flats(g, mode_for_alpha(g.alpha()), cap);
  WhitneyPath w;
  w.table = mobius_table(flats);
  w.report = counts_from_whitney(w.table, d, g.n());
  w.report.degenerate = g.has_degenerate_loop();
  w.complete = cap == std::max(g.n() - 1, 0);
  return w;
}

int run_analyze(const RunConfig& c, std::ostream& out) {
  if (c.dim < 1) throw InputError("--dim must be at least 1");
  GainGraph g = load_graph(c);
  WhitneyPath w = whitney_path(g, c.dim);
  std::optional<Polynomial> chi;
  if (w.complete) chi = polynomials(w.table, g.n()).chi_b;
  if (c.format == "text") {
    std::string s = report_to_text(w.report);
    if (chi) s += "chi^b(λ) = " + chi->to_text() + "\n";
    emit(c, s, out);
  } else {
    Json j = report_to_json(w.report);
    if (chi) j["chi_b"] = to_json(*chi);
    j["whitney"] = whitney_to_json(w.table);
    emit(c, j.dump(2) + "\n", out);
  }
  return kPass;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  if (c.dim < 1) throw InputError("--dim must be at least 1");
  GainGraph g = load_graph(c);
  if (g.alpha() != 0 && g.alpha() != 2) throw InputError("verify supports alpha 0 or 2");
  if (c.points.empty() && !c.seed_given) throw InputError("verify needs --points or --seed");

  PointConfiguration q;
  if (!c.points.empty()) {
    q = read_points(c.points);
    if (q.d != c.dim) throw InputError("points live in a different dimension than --dim");
    if (q.n() != g.n()) throw InputError("point count differs from vertex count");
  } else {
    try {
      q = sample_generic(g, c.dim, {c.seed, c.bound, c.retries});
    } catch (const std::invalid_argument& ex) {
      throw InputError(ex.what());
    }
  }

  Json comparisons = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok, Json detail = nullptr) {
    Json e{{"check", name}, {"pass", ok}};
    if (!detail.is_null()) e["detail"] = std::move(detail);
    comparisons.push_back(std::move(e));
    all = all && ok;
  };

  IgpResult igp = check_igp(q);
  Json witness = Json::array();
  for (auto [i, j] : igp.witness) witness.push_back({i, j});
  record("ideal general position", igp.ok, igp.ok ? Json(nullptr) : Json{{"dependent_directions", witness}});
  GpResult gp = check_gp(g, q);
  record("general position", gp.ok, gp.certificate);

  WhitneyPath w = whitney_path(g, c.dim);
  auto H = build_arrangement(g, q);
  CountReport geo = geometric_counts(intersection_semilattice(H, c.dim), c.dim);
  geo.degenerate = g.has_degenerate_loop();
  record("whitney = geometry", w.report == geo);

  Json census = nullptr;
  if (c.dim == 2) {
    // coincident hyperplanes draw the same line
    std::vector<Hyperplane> lines;
    std::set<AffineFlat> seen;
    for (const auto& h : H) {
      std::vector<Rational> row = h.normal;
      row.push_back(h.offset);
      if (seen.insert(*AffineFlat::from_rows(2, {row})).second) lines.push_back(h);
    }
    Census cs = planar_census(lines);
    census = {{"f0", to_json(cs.f0)}, {"f1", to_json(cs.f1)}, {"f2", to_json(cs.f2)}};
    record("census = whitney", cs.f0 == w.report.f[0] && cs.f1 == w.report.f[1] && cs.f2 == w.report.f[2]);
  }

  if (c.format == "text") {
    std::ostringstream os;
    for (const auto& e : comparisons) os << (e["pass"].get<bool>() ? "PASS " : "FAIL ") << e["check"].get<std::string>() << "\n";
    os << "whitney path:\n" << report_to_text(w.report) << "geometry path:\n" << report_to_text(geo);
    if (!census.is_null())
      os << "census: f0=" << census["f0"].dump() << " f1=" << census["f1"].dump() << " f2=" << census["f2"].dump() << "\n";
    os << (all ? "verified\n" : "mismatch\n");
    emit(c, os.str(), out);
  } else {
    Json j;
    j["pass"] = all;
    j["comparisons"] = comparisons;
    j["whitney"] = report_to_json(w.report);
    j["geometry"] = report_to_json(geo);
    if (!census.is_null()) j["census"] = census;
    j["points"] = points_to_json(q);
    emit(c, j.dump(2) + "\n", out);
  }
  return all ? kPass : kMismatch;
}

int run_family(const RunConfig& c, std::ostream& out) {
  FamilySpec spec;
  spec.name = c.name;
  spec.n = c.n;
  spec.k = c.k;
  spec.M = c.M;
  spec.m = c.m;
  spec.seed = c.seed;
  GainGraph g;
  try {
    g = make_family(spec);
    if (!c.alpha.empty()) g.set_alpha(parse_rational(c.alpha));
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  emit(c, graph_to_json(g).dump(2) + "\n", out);
  return kPass;
}

int run_render(const RunConfig& c, std::ostream& out) {
  GainGraph g = load_graph(c);
  PointConfiguration q = read_points(c.points);
  try {
    emit(c, render_svg(g, q), out);
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  return kPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting faces of Pythagorean arrangements of gain graphs"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--out", c.out, "output file (default stdout)");
    s->add_option("--format", c.format, "json, text or svg")->check(CLI::IsMember({"json", "text", "svg"}));
    s->add_option("--alpha", c.alpha, "override the distance exponent");
  };

  auto* analyze = app.add_subcommand("analyze", "count flats and faces from the balanced semilattice");
  analyze->add_option("--graph", c.graph)->required();
  analyze->add_option("--dim", c.dim)->required();
  add_common(analyze);

  auto* verify = app.add_subcommand("verify", "compare the combinatorial counts with the geometric oracle");
  verify->add_option("--graph", c.graph)->required();
  verify->add_option("--dim", c.dim)->required();
  verify->add_option("--points", c.points);
  auto* seed_opt = verify->add_option("--seed", c.seed);
  verify->add_option("--bound", c.bound)->check(CLI::PositiveNumber);
  verify->add_option("--retries", c.retries)->check(CLI::PositiveNumber);
  add_common(verify);

  auto* family = app.add_subcommand("family", "write a named gain-graph family");
  family->add_option("--name", c.name)->required();
  family->add_option("--n", c.n)->required();
  family->add_option("--k", c.k);
  family->add_option("--M", c.M, "fat: multiplicity of the unbalanced edges");
  family->add_option("--m", c.m, "contrabalanced: edges per pair");
  family->add_option("--seed", c.seed);
  add_common(family);

  auto* render = app.add_subcommand("render", "draw a planar arrangement as SVG");
  render->add_option("--graph", c.graph)->required();
  render->add_option("--points", c.points)->required();
  add_common(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }
  c.seed_given = seed_opt->count() > 0;

  try {
    if (*analyze) return run_analyze(c, out);
    if (*verify) return run_verify(c, out);
    if (*family) return run_family(c, out);
    return run_render(c, out);
  } catch (const ResourceGuard& ex) {
    err << "resource guard: " << ex.what() << "\n";
    return kGuard;
  } catch (const SamplingFailure& ex) {
    err << "sampling failed: " << ex.what() << "\n";
    return kSamplingFailure;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  }
}

}  // namespace perpdiss
