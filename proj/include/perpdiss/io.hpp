#pragma once

#include "perpdiss/closed_forms.hpp"
#include "perpdiss/gain_graph.hpp"
#include "perpdiss/geometry.hpp"
#include "perpdiss/lift_semilattice.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace perpdiss {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integers become JSON numbers when they fit in 64 bits, strings otherwise.
Json to_json(const Integer& z);
// Integral rationals become numbers; others "p/q".
Json to_json_number(const Rational& r);
Json to_json(const Polynomial& p);  // lowest degree first

GainGraph graph_from_json(const Json& j);
Json graph_to_json(const GainGraph& g);
PointConfiguration points_from_json(const Json& j);
Json points_to_json(const PointConfiguration& q);

Json report_to_json(const CountReport& r);
Json semilattice_to_json(const Semilattice& l);
Json whitney_to_json(const WhitneyTable& t);

// Characteristic polynomial in human notation plus the f/b/a table.
std::string report_to_text(const CountReport& r);

Json read_json_file(const std::string& path);
GainGraph read_graph(const std::string& path);
PointConfiguration read_points(const std::string& path);

}  // namespace perpdiss
