#include "perpdiss/cli.hpp"
#include "perpdiss/closed_forms.hpp"
#include "perpdiss/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace perpdiss;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "perpdiss_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(PERPDISS_TEST_DATA) + "/" + name; }

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("analyze") {
  auto r = run({"analyze", "--graph", data("bal4.json"), "--dim", "2"});
  REQUIRE(r.code == kPass);
  auto j = Json::parse(r.out);
  CHECK(j["f"][2] == 14);
  CHECK(j["b"][2] == 4);
  CHECK(j["p"] == Json::parse("[8,-5,1]"));

  auto o = Json::parse(run({"analyze", "--graph", data("odd_4_2.json"), "--dim", "2"}).out);
  CHECK(o["f"][2] == 330);
  CHECK(o["b"][2] == 270);
  CHECK(o["p"] == Json::parse("[299,-30,1]"));

  auto k1 = run({"analyze", "--graph", data("k1.json"), "--dim", "1"});
  CHECK(k1.code == kPass);
  auto t = Json::parse(k1.out);
  CHECK(t["f"][1] == 1);
  CHECK(t["chi_b"] == Json::parse("[0,1]"));

  auto txt = run({"analyze", "--graph", data("bal4.json"), "--dim", "2", "--format", "text"});
  CHECK(txt.out.find("p(λ) = λ^2 - 5λ + 8") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--graph", data("gt4.json"), "--dim", "2", "--seed", "7"});
  CHECK(r.code == kPass);
  auto j = Json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["whitney"]["f"][2] == 18);
  CHECK(j["geometry"]["f"][2] == 18);
  CHECK(j["census"]["f2"] == 18);

  auto c = Json::parse(run({"verify", "--graph", data("contra03.json"), "--dim", "2", "--seed", "1"}).out);
  CHECK(c["pass"] == true);
  CHECK(c["geometry"]["f"][2] == 36);
  CHECK(c["geometry"]["b"][2] == 18);

  auto z = run({"verify", "--graph", data("contra03.json"), "--dim", "2", "--seed", "1", "--alpha", "2"});
  CHECK(z.code == kPass);

  auto bad = run({"verify", "--graph", data("gt4.json"), "--points", data("collinear4.json"), "--dim", "2"});
  CHECK(bad.code == kMismatch);
  auto b = Json::parse(bad.out);
  CHECK(b["comparisons"][0]["check"] == "ideal general position");
  CHECK(b["comparisons"][0]["pass"] == false);

  auto again = run({"verify", "--graph", data("gt4.json"), "--dim", "2", "--seed", "7"});
  CHECK(again.out == r.out);
}

TEST_CASE("family and render") {
  auto r = run({"family", "--name", "odd", "--n", "4", "--k", "2"});
  CHECK(r.code == kPass);
  CHECK(Json::parse(r.out)["edges"].size() == 30);

  auto c = graph_from_json(Json::parse(run({"family", "--name", "catalan", "--n", "3"}).out));
  CHECK(c.edges().size() == 9);
  CHECK(c.edges()[0].gain == -1);
  CHECK(c.edges()[2].gain == 1);

  const auto svg = temp_path("perpdiss_render_test.svg");
  auto v = run({"render", "--graph", data("gt3.json"), "--points", data("p3.json"), "--out", svg});
  CHECK(v.code == kPass);
  auto text = slurp(svg);
  std::remove(svg.c_str());
  auto count = [&](const std::string& s) {
    std::size_t n = 0;
    for (auto p = text.find(s); p != std::string::npos; p = text.find(s, p + 1)) ++n;
    return n;
  };
  CHECK(count("<path ") == 3);
  CHECK(count("<circle ") == 3);
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze", "--graph", data("missing.json"), "--dim", "2"}).code == kInputError);
  CHECK(run({"analyze", "--graph", data("p3.json"), "--dim", "2"}).code == kInputError);
  CHECK(run({"analyze", "--graph", data("bal4.json"), "--dim", "0"}).code == kInputError);
  CHECK(run({"frobnicate"}).code == kInputError);
  CHECK(run({"family", "--name", "nonsense", "--n", "3"}).code == kInputError);
  CHECK(run({"verify", "--graph", data("gt4.json"), "--dim", "2", "--alpha", "1"}).code == kInputError);
  CHECK(run({"verify", "--graph", data("gt4.json"), "--dim", "2"}).code == kInputError);
  CHECK(run({"--help"}).code == kPass);

  // 45 hyperplanes exceed the intersection guard
  const auto big = temp_path("perpdiss_big_graph.json");
  FamilySpec s{"odd", 3};
  s.k = 7;
  std::ofstream(big) << graph_to_json(make_family(s)).dump();
  CHECK(run({"verify", "--graph", big, "--points", data("p3.json"), "--dim", "2"}).code == kGuard);
  std::remove(big.c_str());

  // coordinates in {-1, 0, 1} cannot place five points generically
  CHECK(run({"verify", "--graph", data("gt4.json"), "--dim", "1", "--seed", "1", "--bound", "1", "--retries", "3"}).code ==
        kSamplingFailure);
}

TEST_CASE("JSON round trips") {
  GainGraph g(3, 2);
  g.add_edge(3, 1, frac(3, 2));
  g.add_edge(1, 2, 0);
  auto back = graph_from_json(graph_to_json(g));
  CHECK(back.n() == 3);
  CHECK(back.alpha() == 2);
  CHECK(back.edges()[0].gain == frac(-3, 2));

  PointConfiguration q{2, {{frac(1, 3), 0}, {2, -5}}};
  CHECK(points_from_json(points_to_json(q)).points == q.points);
  CHECK_THROWS_AS(points_from_json(Json::parse(R"({"d":2,"points":[["1"]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[{"i":1,"j":3,"gain":"0"}]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[{"i":1,"j":2,"gain":"x"}]})")), InputError);

  CountReport r = planar_counts(9, 27, 1);
  CHECK(report_to_json(r).dump() == R"({"d":2,"f":[25,60,36],"b":[25,42,18],"a":[25,9,1],"p":[26,-9,1]})");
}
