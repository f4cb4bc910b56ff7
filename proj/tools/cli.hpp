#pragma once

// Command-line front end. run() takes explicit streams so tests can drive it.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "latbb/io.hpp"
#include "latbb/latbb.hpp"

namespace latbb::cli {

using json = nlohmann::json;

/// Bad invocation or input (exit status 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The computation cannot proceed on valid input (exit status 1).
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string lattice;
  std::string ideal;
  std::string out;
  std::string points;
  std::string format = "json";
  std::string render;
  bool only_max = false;
  bool check_groebner = false;
  std::size_t cap = oracle::kDefaultCap;
  unsigned seed = 0;  // reserved; nothing is randomised
};

namespace detail {

inline json read_json(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw UsageError(std::string("cannot open ") + what + " file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string(what) + " file '" + path + "': " + e.what());
  }
}

inline Lattice load_lattice(const Options& o) { return io::lattice_from_json(read_json(o.lattice, "lattice")); }

inline RectUnion load_ideal(const Options& o, const Lattice& lat) {
  if (o.ideal.empty()) throw UsageError("--ideal is required");
  RectUnion u = io::rect_union_from_json(read_json(o.ideal, "ideal"));
  if (u.dim() != lat.dim()) throw UsageError("ideal has dimension " + std::to_string(u.dim()) +
                                             " but the lattice has " + std::to_string(lat.dim()));
  return u;
}

inline json size_json(const RectUnion& u) {
  const Cardinality c = u.size();
  return c.infinite ? json(nullptr) : json(c.value);
}

// null when the test is not available for this rank.
inline json max_compatible_json(const RectUnion& u, const Lattice& lat) {
  try {
    return is_max_compatible(u, lat);
  } catch (const UnsupportedError&) {
    return nullptr;
  }
}

inline json realizability_json(const RectUnion& u, const Lattice& lat) {
  try {
    return io::to_json(groebner_realizable(u, lat));
  } catch (const UnsupportedError&) {
    return nullptr;
  }
}

inline std::string signature_text(const Signature& s) {
  std::string t;
  for (bool b : s) t += b ? '1' : '0';
  return t;
}

inline json pairs_json(const std::vector<XPair>& x1) {
  json a = json::array();
  for (const auto& p : x1) a.push_back(json::array({p.a0, p.a1}));
  return a;
}

}  // namespace detail

inline void cmd_hnf(const Options& o, std::ostream& out) {
  const Lattice lat = detail::load_lattice(o);
  if (o.format == "text") {
    for (const auto& r : lat.hnf()) out << to_string(r) << '\n';
    if (lat.full_rank()) out << "determinant " << lat.determinant() << '\n';
    return;
  }
  json j{{"n", lat.dim()},
         {"rank", lat.rank()},
         {"hnf", lat.hnf()},
         {"pivot_columns", lat.pivot_columns()},
         {"pivots", lat.pivots()},
         {"free_columns", lat.free_columns()}};
  if (lat.full_rank()) j["determinant"] = lat.determinant();
  out << j.dump(2) << '\n';
}

inline void cmd_analyze(const Options& o, std::ostream& out) {
  const IdealSearch s = find_maximal_ideals(detail::load_lattice(o));
  if (o.format == "text") {
    out << "A1:";
    for (const auto& a : s.a1) out << ' ' << to_string(a);
    out << "\nX1:";
    for (const auto& p : s.x1) out << ' ' << to_string(p.a0) << '|' << to_string(p.a1);
    out << "\nV: " << to_string(s.v) << "\nregions:\n";
    for (std::size_t i = 0; i < s.graph.size(); ++i)
      out << "  " << latbb::detail::region_name(i) << ' ' << to_string(s.graph.regions[i].representative) << ' '
          << to_string(s.graph.regions[i].points) << '\n';
    out << "missing edges:";
    for (const auto& [u, v] : s.graph.non_edges())
      out << ' ' << latbb::detail::region_name(u) << latbb::detail::region_name(v);
    out << "\nmaximal cliques: " << s.cliques.size() << '\n';
    return;
  }
  json regions = json::array();
  for (std::size_t i = 0; i < s.graph.size(); ++i) {
    const Region& r = s.graph.regions[i];
    regions.push_back({{"name", latbb::detail::region_name(i)},
                       {"representative", r.representative},
                       {"signature", detail::signature_text(r.signature)},
                       {"points", io::to_json(r.points)}});
  }
  json non_edges = json::array();
  for (const auto& [u, v] : s.graph.non_edges()) non_edges.push_back({u, v});
  out << json{{"hnf", s.lattice.hnf()},
              {"A1", s.a1},
              {"X1", detail::pairs_json(s.x1)},
              {"V", io::to_json(s.v)},
              {"regions", regions},
              {"non_edges", non_edges},
              {"cliques", s.cliques}}
             .dump(2)
      << '\n';
}

inline void cmd_order_ideals(const Options& o, std::ostream& out) {
  const IdealSearch s = find_maximal_ideals(detail::load_lattice(o));
  json ideals = json::array();
  std::size_t n_max = 0, n_real = 0;
  for (std::size_t i = 0; i < s.ideals.size(); ++i) {
    const RectUnion& u = s.ideals[i];
    json e{{"clique", s.cliques[i]}, {"ideal", io::to_json(u)}, {"size", detail::size_json(u)}};
    e["max_compatible"] = detail::max_compatible_json(u, s.lattice);
    if (o.only_max && e["max_compatible"] != true) continue;
    if (e["max_compatible"] == true) ++n_max;
    if (o.check_groebner && e["max_compatible"] == true) {
      e["realizability"] = detail::realizability_json(u, s.lattice);
      if (e["realizability"].is_object() && e["realizability"]["realizable"] == true) ++n_real;
    }
    ideals.push_back(std::move(e));
  }
  if (o.format == "text") {
    for (const auto& e : ideals) {
      out << to_string(io::rect_union_from_json(e["ideal"])) << "  size " << e["size"].dump() << "  max-compatible "
          << e["max_compatible"].dump();
      if (e.contains("realizability") && e["realizability"].is_object())
        out << "  realizable " << e["realizability"]["realizable"].dump();
      out << '\n';
    }
    return;
  }
  json j{{"count", ideals.size()}, {"max_compatible_count", n_max}, {"ideals", ideals}};
  if (o.check_groebner) j["realizable_count"] = n_real;
  out << j.dump(2) << '\n';
}

inline void cmd_border_basis(const Options& o, std::ostream& out) {
  const Lattice lat = detail::load_lattice(o);
  const RectUnion ideal = detail::load_ideal(o, lat);
  if (!is_order_ideal(ideal)) throw ContractError("the ideal is not downward closed");
  std::vector<BinomialFamily> fams;
  try {
    fams = border_families(ideal, lat);
  } catch (const std::invalid_argument& e) {
    throw ContractError(e.what());
  }
  if (o.format == "text") {
    for (const auto& f : fams)
      for (const auto& line : family_lines(f)) out << line << '\n';
    if (o.check_groebner) {
      const auto r = groebner_realizable(fams);
      out << (r.realizable ? "realizable, weights " + to_string(r.witness) : std::string("not realizable")) << '\n';
    }
    return;
  }
  json families = json::array();
  for (const auto& f : fams) families.push_back(io::to_json(f));
  json j{{"border", io::to_json(border(ideal))}, {"families", families}};
  if (o.render == "monomials") {
    json lines = json::array();
    for (const auto& f : fams)
      for (const auto& line : family_lines(f)) lines.push_back(line);
    j["binomials"] = lines;
  }
  if (o.check_groebner) j["realizability"] = io::to_json(groebner_realizable(fams));
  out << j.dump(2) << '\n';
}

inline void cmd_reduce(const Options& o, std::istream& in, std::ostream& out) {
  const Lattice lat = detail::load_lattice(o);
  const RectUnion ideal = detail::load_ideal(o, lat);
  if (!is_order_ideal(ideal)) throw ContractError("the ideal is not downward closed");
  try {
    if (detail::max_compatible_json(ideal, lat) == false) throw ContractError("the ideal is not max-compatible");
  } catch (const std::invalid_argument& e) {
    throw ContractError(e.what());
  }
  const IdealIndex index(ideal, lat);
  std::ifstream file;
  if (!o.points.empty()) {
    file.open(o.points);
    if (!file) throw UsageError("cannot open points file '" + o.points + "'");
  }
  std::istream& src = o.points.empty() ? in : file;
  json results = json::array();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(src, line)) {
    ++lineno;
    std::istringstream ls(line);
    IntVec z;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        z.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw UsageError("line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
      }
    }
    if (z.empty()) continue;
    if (z.size() != lat.dim())
      throw UsageError("line " + std::to_string(lineno) + ": expected " + std::to_string(lat.dim()) + " integers");
    const auto b = index.find(z);
    if (!b) throw ContractError("no representative of " + to_string(z) + " in the ideal");
    if (o.format == "text") {
      for (std::size_t i = 0; i < b->size(); ++i) out << (i ? " " : "") << (*b)[i];
      out << '\n';
    } else {
      results.push_back({{"input", z}, {"representative", *b}});
    }
  }
  if (o.format != "text") out << json{{"points", results}}.dump(2) << '\n';
}

inline void cmd_dim2(const Options& o, std::ostream& out) {
  const Lattice lat = detail::load_lattice(o);
  if (lat.dim() != 2 || lat.rank() != 2) throw UsageError("dim2 needs a rank-2 lattice in Z^2");
  const TwoHNF h = second_hnf(lat);
  json ideals = json::array(), bases = json::array();
  std::size_t n_real = 0;
  for (const auto& p : ideals_2d(lat)) {
    json e{{"pair", {p.p, p.q}},
           {"ideal", io::to_json(p.ideal)},
           {"size", detail::size_json(p.ideal)},
           {"max_compatible", is_max_compatible(p.ideal, lat)},
           {"corners", p.corners.corners},
           {"reps", p.corners.reps}};
    if (o.check_groebner) {
      e["realizability"] = io::to_json(groebner_realizable(p.ideal, lat));
      if (e["realizability"]["realizable"] == true) ++n_real;
    }
    json gb = json::array();
    for (const auto& b : p.groebner) gb.push_back({{"lead", b.lead}, {"tail", b.tail}, {"text", binomial(b.lead, b.tail)}});
    bases.push_back(gb);
    ideals.push_back(std::move(e));
  }
  if (o.format == "text") {
    out << "a = " << h.a1 << ' ' << h.a2 << ' ' << h.a3 << "\nb = " << h.b1 << ' ' << h.b2 << ' ' << h.b3 << '\n';
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      out << to_string(io::rect_union_from_json(ideals[i]["ideal"])) << " :";
      for (const auto& b : bases[i]) out << "  " << b["text"].get<std::string>();
      out << '\n';
    }
    return;
  }
  json j{{"a", {h.a1, h.a2, h.a3}},
         {"b", {h.b1, h.b2, h.b3}},
         {"count", ideals.size()},
         {"max_compatible_count", ideals.size()},
         {"ideals", ideals},
         {"groebner_bases", bases}};
  if (o.check_groebner) j["realizable_count"] = n_real;
  out << j.dump(2) << '\n';
}

inline void cmd_plot(const Options& o, std::ostream& out) {
  const Lattice lat = detail::load_lattice(o);
  if (lat.dim() != 2) throw UsageError("plot needs n = 2");
  out << plot_svg(find_maximal_ideals(lat));
}

inline void cmd_oracle_check(const Options& o, std::ostream& out) {
  const Lattice lat = detail::load_lattice(o);
  if (!lat.full_rank()) throw UsageError("oracle-check needs a full-rank lattice");
  std::vector<std::vector<NatVec>> direct;
  try {
    direct = oracle::direct_maximal_ideals(lat, o.cap);
  } catch (const std::length_error& e) {
    throw ContractError(e.what());
  }
  std::vector<std::vector<NatVec>> pipeline;
  for (const auto& u : find_maximal_ideals(lat).ideals) pipeline.push_back(u.points());
  std::sort(pipeline.begin(), pipeline.end());
  const bool equal = pipeline == direct;
  out << json{{"oracle_ideals", direct.size()}, {"pipeline_ideals", pipeline.size()}, {"equal", equal}}.dump(2) << '\n';
  if (!equal) throw ContractError("oracle and pipeline disagree");
}

/// Parses argv and runs one subcommand. Returns the exit status.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Border bases and maximal compatible order ideals of integer lattices", "latbb"};
  app.require_subcommand(1);
  Options o;
  o.cap = oracle::cap_from_env();

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--lattice", o.lattice, "lattice JSON file")->required();
    sub->add_option("--out", o.out, "write output here instead of stdout");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", o.seed, "reserved, unused");
  };
  auto* hnf_cmd = app.add_subcommand("hnf", "Hermite normal form");
  auto* analyze = app.add_subcommand("analyze", "A1, X1, V, regions and the quotient graph");
  auto* ideals = app.add_subcommand("order-ideals", "maximal compatible order ideals");
  auto* basis = app.add_subcommand("border-basis", "border basis of an order ideal");
  auto* reduce = app.add_subcommand("reduce", "representatives of exponent vectors read line by line");
  auto* plane = app.add_subcommand("dim2", "closed form for rank-2 lattices in Z^2");
  auto* plot = app.add_subcommand("plot", "SVG picture for n = 2");
  auto* check = app.add_subcommand("oracle-check", "compare with the brute-force ideal search");
  check->group("");  // hidden
  for (auto* s : {hnf_cmd, analyze, ideals, basis, reduce, plane, plot, check}) common(s);
  ideals->add_flag("--only-max", o.only_max, "keep only max-compatible ideals");
  for (auto* s : {ideals, basis, plane}) s->add_flag("--check-groebner", o.check_groebner, "test for a term order");
  for (auto* s : {basis, reduce}) s->add_option("--ideal", o.ideal, "order ideal JSON file")->required();
  basis->add_option("--render", o.render, "also print binomials")->check(CLI::IsMember({"monomials"}));
  reduce->add_option("--points", o.points, "exponent vectors, one per line (default: stdin)");
  check->add_option("--cap", o.cap, "largest V the oracle accepts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  std::ostringstream buffer;
  try {
    if (hnf_cmd->parsed()) cmd_hnf(o, buffer);
    else if (analyze->parsed()) cmd_analyze(o, buffer);
    else if (ideals->parsed()) cmd_order_ideals(o, buffer);
    else if (basis->parsed()) cmd_border_basis(o, buffer);
    else if (reduce->parsed()) cmd_reduce(o, in, buffer);
    else if (plane->parsed()) cmd_dim2(o, buffer);
    else if (plot->parsed()) cmd_plot(o, buffer);
    else if (check->parsed()) cmd_oracle_check(o, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ContractError& e) {
    out << buffer.str();
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (o.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write '" << o.out << "'\n";
      return 2;
    }
    f << buffer.str();
  }
  return 0;
}

}  // namespace latbb::cli
