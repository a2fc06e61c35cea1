#include "perpdiss/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace perpdiss {

namespace {

Rational rational_field(const Json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  throw InputError(std::string(what) + " must be a rational string or an integer");
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) throw InputError(std::string("missing integer \"") + key + "\"");
  return j.at(key).get<int>();
}

}  // namespace

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

Json to_json_number(const Rational& r) {
  if (r.get_den() == 1) return to_json(r.get_num());
  return r.get_str();
}

Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json_number(c));
  return a;
}

GainGraph graph_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("graph must be a JSON object");
    const int n = int_field(j, "n");
    if (n < 0) throw InputError("negative vertex count");
    Rational alpha = j.contains("alpha") ? rational_field(j.at("alpha"), "alpha") : Rational(0);
    GainGraph g(n, alpha);
    if (!j.contains("edges") || !j.at("edges").is_array()) throw InputError("missing \"edges\" array");
    for (const auto& e : j.at("edges")) {
      const int a = int_field(e, "i"), b = int_field(e, "j");
      if (a < 1 || b < 1 || a > n || b > n) throw InputError("edge endpoint out of range");
      if (!e.contains("gain")) throw InputError("edge without gain");
      g.add_edge(a, b, rational_field(e.at("gain"), "gain"));
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(ex.what());
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
}

Json graph_to_json(const GainGraph& g) {
  Json j;
  j["n"] = g.n();
  j["alpha"] = to_string(g.alpha());
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({{"i", e.i}, {"j", e.j}, {"gain", to_string(e.gain)}});
  j["edges"] = edges;
  return j;
}

PointConfiguration points_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("points must be a JSON object");
    PointConfiguration q;
    q.d = int_field(j, "d");
    if (q.d < 0) throw InputError("negative dimension");
    if (!j.contains("points") || !j.at("points").is_array()) throw InputError("missing \"points\" array");
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || static_cast<int>(p.size()) != q.d) throw InputError("point of wrong dimension");
      Point pt;
      for (const auto& x : p) pt.push_back(rational_field(x, "coordinate"));
      q.points.push_back(std::move(pt));
    }
    return q;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(ex.what());
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
}

Json points_to_json(const PointConfiguration& q) {
  Json pts = Json::array();
  for (const auto& p : q.points) {
    Json row = Json::array();
    for (const auto& x : p) row.push_back(to_string(x));
    pts.push_back(row);
  }
  return {{"d", q.d}, {"points", pts}};
}

Json report_to_json(const CountReport& r) {
  auto arr = [](const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
  };
  Json j;
  j["d"] = r.d;
  j["f"] = arr(r.f);
  j["b"] = arr(r.b);
  j["a"] = arr(r.a);
  j["p"] = to_json(r.p);
  if (r.degenerate) j["degenerate"] = true;
  if (!r.b_unreliable.empty()) j["b_unreliable"] = r.b_unreliable;
  return j;
}

Json semilattice_to_json(const Semilattice& l) {
  Json out = Json::array();
  for (const Flat& f : l.elements) out.push_back({{"edge_ids", f.edge_ids}, {"partition", f.partition.blocks}, {"rank", f.rank}});
  return out;
}

Json whitney_to_json(const WhitneyTable& t) {
  Json w = Json::array(), W = Json::array(), w2 = Json::array();
  for (const auto& x : t.w) w.push_back(to_json(x));
  for (const auto& x : t.W) W.push_back(to_json(x));
  for (const auto& [ij, v] : t.w2) w2.push_back({ij.first, ij.second, to_json(v)});
  return {{"w", w}, {"W", W}, {"w2", w2}};
}

std::string report_to_text(const CountReport& r) {
  std::ostringstream os;
  os << "p(λ) = " << r.p.to_text() << "\n";
  if (r.degenerate) os << "degenerate: a zero loop makes the whole space a hyperplane\n";
  std::size_t width = 1;
  for (const auto* v : {&r.f, &r.b, &r.a})
    for (const auto& x : *v) width = std::max(width, x.get_str().size());
  const int w = static_cast<int>(width) + 2;
  os << std::setw(3) << "k" << std::setw(w) << "f" << std::setw(w) << "b" << std::setw(w) << "a" << "\n";
  for (int k = 0; k <= r.d; ++k)
    os << std::setw(3) << k << std::setw(w) << r.f[k].get_str() << std::setw(w) << r.b[k].get_str() << std::setw(w)
       << r.a[k].get_str() << "\n";
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(path + ": " + ex.what());
  }
}

GainGraph read_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }
PointConfiguration read_points(const std::string& path) { return points_from_json(read_json_file(path)); }

}  // namespace perpdiss
