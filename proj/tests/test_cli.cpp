#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace latbb;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "latbb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(LATBB_SAMPLES) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("latbb_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::set<std::string> lines(const std::string& text) {
  std::set<std::string> out;
  std::istringstream s(text);
  std::string l;
  while (std::getline(s, l))
    if (!l.empty()) out.insert(l);
  return out;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST(Cli, Hnf) {
  const auto r = run_cli({"hnf", "--lattice", sample("z3.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["hnf"], json::parse("[[1,0,5],[0,1,3],[0,0,14]]"));
  EXPECT_EQ(j["determinant"], 14);
  const auto t = run_cli({"hnf", "--lattice", sample("ex22.json"), "--format", "text"});
  EXPECT_EQ(t.out, "(2,6)\n(0,10)\ndeterminant 20\n");
}

TEST(Cli, OrderIdealsOnlyMax) {
  const auto r = run_cli({"order-ideals", "--lattice", sample("ex22.json"), "--only-max"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["count"], 3);
  for (const auto& e : j["ideals"]) {
    EXPECT_EQ(e["max_compatible"], true);
    EXPECT_EQ(e["size"], 20);
  }
}

TEST(Cli, OrderIdealsCheckGroebner) {
  const auto r = run_cli({"order-ideals", "--lattice", sample("z3.json"), "--check-groebner"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["count"], 35);
  EXPECT_EQ(j["max_compatible_count"], 35);
  EXPECT_EQ(j["realizable_count"], 33);
  int flagged = 0;
  for (const auto& e : j["ideals"]) flagged += e["realizability"]["realizable"].get<bool>();
  EXPECT_EQ(flagged, 33);
}

TEST(Cli, OrderIdealsRankDeficient) {
  const auto r = run_cli({"order-ideals", "--lattice", sample("ex312.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["count"], 6);
  for (const auto& e : j["ideals"]) EXPECT_TRUE(e["size"].is_null());
}

TEST(Cli, BorderBasisText) {
  const auto r = run_cli({"border-basis", "--lattice", sample("ex22.json"), "--ideal", sample("ex22_box.json"),
                          "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::set<std::string> want{"x^2 - y^4",     "x^2*y - y^5",   "x^2*y^2 - y^6", "x^2*y^3 - y^7",
                                   "x^2*y^4 - y^8", "x^2*y^5 - y^9", "x^2*y^6 - 1",   "x^2*y^7 - y",
                                   "x^2*y^8 - y^2", "x^2*y^9 - y^3", "y^10 - 1",      "x*y^10 - x"};
  EXPECT_EQ(lines(r.out), want);
}

TEST(Cli, BorderBasisParametric) {
  const auto r = run_cli({"border-basis", "--lattice", sample("ex312.json"), "--ideal", sample("ex312_h.json"),
                          "--format", "text", "--check-groebner"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("x^i*z^15 - x^(i-6)  (i >= 7)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("realizable"), std::string::npos);
}

TEST(Cli, BorderBasisJsonRoundTrip) {
  const auto r = run_cli({"border-basis", "--lattice", sample("ex312.json"), "--ideal", sample("ex312_h.json"),
                          "--render", "monomials", "--check-groebner"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(io::rect_union_from_json(j["border"]).rects(), border(latbb::test::ex312_h()).rects());
  const auto fams = border_families(latbb::test::ex312_h(), latbb::test::ex312());
  ASSERT_EQ(j["families"].size(), fams.size());
  for (std::size_t i = 0; i < fams.size(); ++i) {
    const BinomialFamily f = io::family_from_json(j["families"][i], "family");
    EXPECT_EQ(f.params, fams[i].params);
    EXPECT_EQ(f.border_map, fams[i].border_map);
    EXPECT_EQ(f.rep_map, fams[i].rep_map);
    EXPECT_EQ(io::to_json(f), j["families"][i]);
  }
  EXPECT_EQ(j["binomials"].size(), fams.size());
  EXPECT_TRUE(j["realizability"].contains("realizable"));
  EXPECT_EQ(json::parse(j.dump()), j);
}

TEST(Cli, Reduce) {
  const auto r = run_cli({"reduce", "--lattice", sample("ex312.json"), "--ideal", sample("ex312_h.json"), "--format",
                          "text"},
                         "6 0 15\n0 1 19\n\n3 0 100\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0 0 0\n4 0 30\n3 0 100\n");
  const auto pts = temp_file("points.txt", "2 0\n");
  const auto j = run_cli({"reduce", "--lattice", sample("ex22.json"), "--ideal", sample("ex22_box.json"), "--points", pts});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(json::parse(j.out)["points"][0]["representative"], json::parse("[0,4]"));
}

TEST(Cli, ReduceErrors) {
  const auto bad = temp_file("bad_ideal.json", R"({"n":3,"rects":[{"lo":[0,0,0],"hi":[3,1,1]},{"lo":[0,0,0],"hi":[1,3,1]},{"lo":[0,0,0],"hi":[1,1,4]}]})");
  auto r = run_cli({"reduce", "--lattice", sample("r3.json"), "--ideal", bad}, "1 1 1\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("max-compatible"), std::string::npos);
  r = run_cli({"reduce", "--lattice", sample("ex22.json"), "--ideal", sample("ex22_box.json")}, "1 2 3\n");
  EXPECT_EQ(r.code, 2);
  r = run_cli({"reduce", "--lattice", sample("ex22.json"), "--ideal", sample("ex22_box.json")}, "1 x\n");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"hnf"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate", "--lattice", sample("ex22.json")}).code, 2);
  EXPECT_EQ(run_cli({"hnf", "--lattice", sample("ex22.json"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"hnf", "--lattice", "/nonexistent/lattice.json"}).code, 2);
  EXPECT_EQ(run_cli({"border-basis", "--lattice", sample("ex22.json")}).code, 2);
  EXPECT_EQ(run_cli({"border-basis", "--lattice", sample("ex22.json"), "--ideal", sample("z3_o1.json")}).code, 2);
  EXPECT_EQ(run_cli({"dim2", "--lattice", sample("z3.json")}).code, 2);
  EXPECT_EQ(run_cli({"plot", "--lattice", sample("z3.json")}).code, 2);
  EXPECT_EQ(run_cli({"hnf", "--help"}).code, 0);
}

TEST(Cli, MalformedJsonNamesField) {
  auto r = run_cli({"hnf", "--lattice", temp_file("nogens.json", R"({"n": 2})")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("generators"), std::string::npos) << r.err;
  r = run_cli({"hnf", "--lattice", temp_file("float.json", R"({"n": 2, "generators": [[1.5, 0], [0, 1]]})")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("generators[0]"), std::string::npos) << r.err;
  r = run_cli({"hnf", "--lattice", temp_file("short.json", R"({"n": 3, "generators": [[1, 0], [0, 1]]})")});
  EXPECT_EQ(r.code, 2);
  r = run_cli({"hnf", "--lattice", temp_file("broken.json", "{\"n\": ")});
  EXPECT_EQ(r.code, 2);
  r = run_cli({"border-basis", "--lattice", sample("ex22.json"), "--ideal",
               temp_file("nohi.json", R"({"n": 2, "rects": [{"lo": [0, 0]}]})")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("hi"), std::string::npos) << r.err;
}

TEST(Cli, ContractViolations) {
  const auto up = temp_file("up.json", R"({"n": 2, "rects": [{"lo": [1, 1], "hi": [null, null]}]})");
  EXPECT_EQ(run_cli({"border-basis", "--lattice", sample("ex22.json"), "--ideal", up}).code, 1);
  EXPECT_EQ(run_cli({"oracle-check", "--lattice", sample("ex22.json"), "--cap", "5"}).code, 1);
}

TEST(Cli, Dim2) {
  const auto r = run_cli({"dim2", "--lattice", sample("ex22.json"), "--check-groebner"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["a"], json::parse("[2,6,10]"));
  EXPECT_EQ(j["b"], json::parse("[4,2,10]"));
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["realizable_count"], 3);
  std::set<std::string> texts;
  for (const auto& gb : j["groebner_bases"])
    for (const auto& b : gb) texts.insert(b["text"].get<std::string>());
  EXPECT_TRUE(texts.count("x^2 - y^4"));
  EXPECT_TRUE(texts.count("y^10 - 1"));
  const auto t = run_cli({"dim2", "--lattice", sample("ex22.json"), "--format", "text"});
  EXPECT_EQ(t.out.rfind("a = 2 6 10\nb = 4 2 10\n", 0), 0u);
}

TEST(Cli, AnalyzeAndOracle) {
  auto r = run_cli({"analyze", "--lattice", sample("ex22.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["A1"].size(), 4u);
  EXPECT_EQ(j["X1"].size(), 4u);
  EXPECT_EQ(j["regions"].size(), 6u);
  EXPECT_EQ(j["non_edges"].size(), 5u);
  EXPECT_EQ(io::rect_union_from_json(j["V"]).size().value, 40);
  r = run_cli({"oracle-check", "--lattice", sample("r3.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["equal"], true);
  EXPECT_EQ(json::parse(r.out)["oracle_ideals"], 23);
}

TEST(Cli, OutFile) {
  const auto path = (std::filesystem::temp_directory_path() / "latbb_test_out.json").string();
  std::filesystem::remove(path);
  const auto r = run_cli({"hnf", "--lattice", sample("ex22.json"), "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  EXPECT_EQ(json::parse(f)["determinant"], 20);
}

TEST(Plot, RegionsAndMissingEdges) {
  const auto a = run_cli({"plot", "--lattice", sample("ex22.json")});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(count(a.out, "class=\"region-label\""), 6u);
  EXPECT_EQ(count(a.out, "class=\"missing-edge\""), 5u);
  EXPECT_EQ(count(a.out, "class=\"edge\""), 10u);
  const auto b = run_cli({"plot", "--lattice", sample("ex22.json")});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("<svg", 0), 0u);
}

TEST(Plot, GridOnly) {
  IdealSearch s;
  s.lattice = latbb::test::ex22();
  s.v = RectUnion(2);
  const std::string svg = plot_svg(s);
  EXPECT_NE(svg.find("class=\"grid\""), std::string::npos);
  EXPECT_EQ(svg.find("region"), std::string::npos);
  s.lattice = latbb::test::z3();
  EXPECT_THROW(plot_svg(s), std::invalid_argument);
}

TEST(Render, MonomialRoundTrip) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<Int> e(0, 12);
  for (std::size_t n : {1u, 2u, 3u, 4u, 6u})
    for (int t = 0; t < 50; ++t) {
      NatVec v(n);
      for (auto& x : v) x = e(rng) % 3 == 0 ? 0 : e(rng);
      EXPECT_EQ(parse_monomial(monomial(v), n), v) << monomial(v);
    }
  EXPECT_EQ(monomial({0, 0, 0}), "1");
  EXPECT_EQ(monomial({1, 0, 2, 0}), "x1*x3^2");
  EXPECT_EQ(parse_monomial("x * y^3", 2), (NatVec{1, 3}));
  EXPECT_THROW(parse_monomial("w^2", 2), std::invalid_argument);
  EXPECT_THROW(parse_monomial("x^", 2), std::invalid_argument);
  EXPECT_THROW(parse_monomial("", 2), std::invalid_argument);
}

TEST(Render, FamilyLines) {
  const auto fams = border_families(RectUnion::single(HyperRect{{0, 0}, {2, 10}}), latbb::test::ex22());
  std::size_t total = 0;
  for (const auto& f : fams) total += family_lines(f).size();
  EXPECT_EQ(total, 12u);
}

TEST(Io, RoundTrips) {
  const Lattice lat = latbb::test::ex312();
  EXPECT_EQ(io::lattice_from_json(io::to_json(lat)).hnf(), lat.hnf());
  const RectUnion h = latbb::test::ex312_h();
  EXPECT_EQ(io::rect_union_from_json(json::parse(io::to_json(h).dump())).rects(), h.rects());
  EXPECT_THROW(io::lattice_from_json(json::parse(R"({"n": 2, "generators": [[0, 0]]})")), io::FormatError);
  EXPECT_THROW(io::rect_union_from_json(json::parse(R"({"rects": [{"lo": [0], "hi": [1, 2]}]})")), io::FormatError);
}
