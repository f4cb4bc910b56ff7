// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            criteria 1-5, 7, 8; the minimality scan is skipped
//   acceptance --slow     also run criterion 6
//   acceptance --only N   run criterion N alone

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latbb/latbb.hpp"
#include "support.hpp"

using namespace latbb;
namespace t = latbb::test;

namespace {

// Collects failed expectations; the first few are reported.
struct Check {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  std::string summary() const {
    std::string s;
    for (std::size_t i = 0; i < failures.size() && i < 3; ++i) s += (i ? "; " : "") + failures[i];
    if (failures.size() > 3) s += "; +" + std::to_string(failures.size() - 3) + " more";
    return s;
  }
};

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::vector<HyperRect>> canonical(const std::vector<RectUnion>& ideals) {
  std::vector<std::vector<HyperRect>> out;
  for (const auto& o : ideals) out.push_back(o.rects());
  return sorted(out);
}

std::size_t region_index(const QuotientGraph& g, const NatVec& rep) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.regions[i].representative == rep) return i;
  return g.size();
}

// Image points of rho on a rect inside the window [lo, hi)^3.
std::set<IntVec> rho_window(const HyperRect& r, const Lattice& lat, Int lo, Int hi) {
  std::set<IntVec> out;
  for (const auto& f : rho_image(r, lat)) {
    HyperRect box = f.params;
    for (std::size_t k = 0; k < box.dim(); ++k)
      if (box.hi[k] == kInf) box.hi[k] = box.lo[k] + 4 * (hi - lo);
    affine::for_each_param(box, [&](const IntVec& s) {
      const IntVec p = f(s);
      if (std::all_of(p.begin(), p.end(), [&](Int x) { return x >= lo && x < hi; })) out.insert(p);
    });
  }
  return out;
}

std::set<IntVec> window(Int lo, Int hi, const std::function<bool(const IntVec&)>& in) {
  std::set<IntVec> out;
  for (Int a = lo; a < hi; ++a)
    for (Int b = lo; b < hi; ++b)
      for (Int c = lo; c < hi; ++c)
        if (in({a, b, c})) out.insert({a, b, c});
  return out;
}

// ---------------------------------------------------------------- criteria

void plane_example(Check& check) {
  const Lattice lat = t::ex22();
  check(lat.hnf() == std::vector<IntVec>{{2, 6}, {0, 10}}, "HNF");
  const IdealSearch s = find_maximal_ideals(lat);
  check(sorted(s.a1) == Antichain{{0, 10}, {2, 4}, {4, 2}, {10, 0}}, "A1");
  check(sorted(s.x1) == sorted(std::vector<XPair>{{{2, 0}, {0, 4}}, {{6, 0}, {0, 2}}, {{0, 4}, {2, 0}}, {{0, 2}, {6, 0}}}),
        "X1");
  std::vector<NatVec> reps;
  for (const auto& r : s.graph.regions) reps.push_back(r.representative);
  check(reps == std::vector<NatVec>{{0, 0}, {0, 2}, {0, 4}, {2, 0}, {2, 2}, {6, 0}}, "region representatives");
  using P = std::pair<std::size_t, std::size_t>;
  check(s.graph.non_edges() == std::vector<P>{{1, 5}, {2, 3}, {2, 4}, {2, 5}, {4, 5}}, "missing edges BF CD CE CF EF");
  check(s.cliques == std::vector<Clique>{{0, 1, 2}, {0, 1, 3, 4}, {0, 3, 5}}, "cliques ABC ABDE ADF");
  check(s.ideals.size() == 3, "three order ideals");
  for (const auto& o : s.ideals) {
    check(o.size().value == 20, "ideal of 20 elements");
    check(is_max_compatible(o, lat), "ideal max-compatible");
  }
  std::set<std::pair<NatVec, NatVec>> got, want;
  for (const auto& f : border_families(RectUnion::single(HyperRect{{0, 0}, {2, 10}}), lat))
    affine::for_each_param(f.params, [&](const IntVec& p) { got.insert({f.border_map(p), f.rep_map(p)}); });
  for (Int i = 0; i <= 5; ++i) want.insert({{2, i}, {0, 4 + i}});
  for (Int j = 0; j <= 3; ++j) want.insert({{2, 6 + j}, {0, j}});
  for (Int k = 0; k <= 1; ++k) want.insert({{k, 10}, {k, 0}});
  check(got == want, "border basis of the box is the 12 binomials");
}

void space_example(Check& check) {
  const Lattice lat = t::ex312();
  const IdealSearch s = find_maximal_ideals(lat);
  check(sorted(s.a1) == Antichain{{0, 3, 3}, {2, 1, 4}, {2, 4, 1}, {6, 0, 15}, {6, 15, 0}}, "A1");
  std::vector<XPair> x1{{{4, 11, 0}, {0, 0, 1}},
                        {{0, 3, 0}, {0, 0, 3}},
                        {{4, 0, 11}, {0, 1, 0}},
                        {{2, 0, 7}, {0, 2, 0}},
                        {{2, 7, 0}, {0, 0, 2}}};
  for (std::size_t i = 0; i < 5; ++i) x1.push_back(x1[i].swapped());
  check(sorted(s.x1) == sorted(x1), "X1 (10 pairs)");
  std::vector<NatVec> reps;
  for (const auto& r : s.graph.regions) reps.push_back(r.representative);
  const std::vector<NatVec> want{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2},
                                 {0, 1, 3}, {0, 2, 0}, {0, 2, 1}, {0, 2, 2}, {0, 2, 3}, {0, 3, 0}, {0, 3, 1},
                                 {0, 3, 2}, {2, 0, 7}, {2, 7, 0}, {4, 0, 11}, {4, 11, 0}};
  check(reps == want, "19 regions");
  const std::size_t r0 = region_index(s.graph, {0, 0, 0}), r4 = region_index(s.graph, {4, 0, 11});
  check(r0 < s.graph.size() &&
            s.graph.regions[r0].points.rects() == RectUnion::single(HyperRect{{0, 0, 0}, {kInf, 1, 1}}).rects(),
        "R_(0,0,0)");
  const RectUnion r4011(3, {HyperRect{{4, 0, 11}, {kInf, 1, 15}}, HyperRect{{4, 0, 15}, {6, 1, kInf}}});
  check(r4 < s.graph.size() && s.graph.regions[r4].points.rects() == r4011.rects(), "R_(4,0,11)");
  check(s.ideals.size() == 6, "6 maximal order ideals");
  for (const auto& o : s.ideals) check(is_max_compatible(o, lat), "ideal max-compatible");
  check(std::any_of(s.ideals.begin(), s.ideals.end(), [](const RectUnion& o) { return o.rects() == t::ex312_h().rects(); }),
        "H1 u H2 among the ideals");

  const auto h1 = rho_window(HyperRect{{0, 0, 0}, {kInf, 1, 15}}, lat, -40, 40);
  const auto h2 = rho_window(HyperRect{{0, 0, 15}, {6, 1, kInf}}, lat, -40, 40);
  const auto w1 = window(-40, 40, [](const IntVec& p) {
    return p[0] >= 0 && p[0] <= 1 && ((p[1] == 0 && p[2] <= 14) || (p[1] == 1 && p[2] <= 3) || (p[1] == 2 && p[2] <= 7));
  });
  const auto w2 = window(-40, 40, [](const IntVec& p) {
    return p[0] >= 0 && p[0] <= 1 && ((p[1] == 0 && p[2] >= 15) || (p[1] == 1 && p[2] >= 4) || (p[1] == 2 && p[2] >= 8));
  });
  check(h1 == w1, "rho(H1)");
  check(h2 == w2, "rho(H2)");
}

void reduction_table(Check& check) {
  const Lattice lat = t::ex312();
  const RectUnion h = t::ex312_h();
  const RectUnion want(3, {HyperRect{{6, 0, 15}, {kInf, 1, 16}}, HyperRect{{6, 0, 16}, {7, 1, kInf}},
                           HyperRect{{0, 1, 15}, {6, 2, kInf}}, HyperRect{{0, 1, 0}, {kInf, 2, 15}}});
  check(border(h).rects() == want.rects(), "border is B1 u B2 u B3 u B4");
  const auto fams = border_families(h, lat);
  check(t::check_border_families(h, lat, fams, 40).empty(), "families cover the border once");
  std::map<NatVec, NatVec> table;
  for (const auto& f : fams)
    for (const auto& [b, rep] : t::family_points(f, 60)) table[b] = rep;

  std::mt19937 rng(4242);
  std::uniform_int_distribution<Int> ri(0, 25), rj(0, 1), rh(0, 3), rk(0, 10);
  for (int n = 0; n < 50; ++n) {
    const Int i = ri(rng), j = rj(rng), hh = rh(rng), k = rk(rng);
    const std::vector<std::pair<NatVec, NatVec>> rows{
        {{6 + i, 0, 15}, {i, 0, 0}},          {{6, 0, 16 + i}, {0, 0, 1 + i}},
        {{j, 1, 15 + i}, {4 + j, 0, 26 + i}}, {{2 + hh, 1, 15 + i}, {hh, 0, 11 + i}},
        {{i, 1, hh}, {4 + i, 0, 11 + hh}},    {{j, 1, 4 + k}, {4 + j, 0, 15 + k}},
        {{2 + i, 1, 4 + k}, {i, 0, k}},
    };
    for (const auto& [b, rep] : rows) {
      check(lat.contains(sub(b, rep)), "row value in the coset of " + to_string(b));
      const auto it = table.find(b);
      check(it != table.end() && it->second == rep, "reduction of " + to_string(b));
    }
    if (j != k) check(!lat.contains(sub({j, 1, 4 + k}, {4 + j, 0, 15 + j})), "variant (4+j,0,15+j) rejected");
  }
}

void counterexample(Check& check) {
  const Lattice lat = t::z3();
  check(lat.hnf() == std::vector<IntVec>{{1, 0, 5}, {0, 1, 3}, {0, 0, 14}}, "HNF");
  const auto s = find_maximal_ideals(lat);
  const RectUnion o1 = t::rect_ideal({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}, {1, 1, 1}});
  const RectUnion o2 = t::rect_ideal({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}});
  int max_compatible = 0, realizable = 0;
  std::vector<RectUnion> failing;
  for (const auto& o : s.ideals) {
    if (!is_max_compatible(o, lat)) continue;
    ++max_compatible;
    check(o.size().value == 14, "ideal of 14 elements");
    const auto fams = border_families(o, lat);
    const auto r = groebner_realizable(fams);
    if (r.realizable) {
      ++realizable;
      check(check_witness(r.witness, fams), "witness verifies");
    } else {
      failing.push_back(o);
      check(check_certificate(r.certificate, 3), "certificate verifies");
    }
  }
  check(max_compatible == 35, "35 max-compatible ideals (got " + std::to_string(max_compatible) + ")");
  check(realizable == 33, "33 realizable (got " + std::to_string(realizable) + ")");
  check(canonical(failing) == canonical({o1, o2}), "the failures are O1 and O2");
}

void rank_three(Check& check) {
  const Lattice lat = t::r3();
  const auto s = find_maximal_ideals(lat);
  check(s.ideals.size() == 23, "23 maximal compatible ideals");
  std::map<Int, int> sizes;
  for (const auto& o : s.ideals) ++sizes[o.size().value];
  check(sizes == std::map<Int, int>{{8, 2}, {9, 2}, {12, 19}}, "sizes 19x12, 2x9, 2x8");
  const RectUnion bad = t::rect_ideal({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  const bool present =
      std::any_of(s.ideals.begin(), s.ideals.end(), [&](const RectUnion& o) { return o.rects() == bad.rects(); });
  check(present, "D(2,0,0) u D(0,2,0) u D(0,0,3) present");
  check(!is_max_compatible(bad, lat), "D(2,0,0) u D(0,2,0) u D(0,0,3) not max-compatible");
}

void minimality_scan(Check& check) {
  int lattices = 0, ideals = 0;
  for (Int c = 1; c <= 14; ++c)
    for (Int a = 0; a <= 5 && a < c; ++a)
      for (Int b = 0; b <= 3 && b < c; ++b) {
        if (a == 5 && b == 3 && c == 14) continue;
        const Lattice lat = hnf({{1, 0, a}, {0, 1, b}, {0, 0, c}});
        ++lattices;
        for (const auto& o : find_maximal_ideals(lat).ideals) {
          if (!is_max_compatible(o, lat)) continue;
          ++ideals;
          const auto fams = border_families(o, lat);
          const auto r = groebner_realizable(fams);
          check(r.realizable, "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                  ") ideal " + to_string(o) + " not realizable");
          if (r.realizable) check(check_witness(r.witness, fams), "witness verifies");
        }
      }
  std::printf("  scanned %d matrices, %d max-compatible ideals\n", lattices, ideals);
}

void plane_cross_check(Check& check) {
  std::vector<Lattice> lats{t::ex22()};
  std::mt19937 rng(777);
  for (int i = 0; i < 30; ++i) lats.push_back(t::random_lattice(rng, 2, 12, 100));
  for (const auto& lat : lats) {
    std::vector<RectUnion> fast;
    for (const auto& pi : ideals_2d(lat)) {
      fast.push_back(pi.ideal);
      check(pi.ideal.size().value == lat.determinant(), "ideal has |det| elements");
      check(groebner_realizable(pi.ideal, lat).realizable, "realizable");
    }
    check(canonical(fast) == canonical(find_maximal_ideals(lat).ideals),
          "dim2 equals region graph for " + to_string(lat.row(0)) + to_string(lat.row(1)));
  }
}

void property_suites(Check& check) {
  std::mt19937 rng(8888);
  std::uniform_int_distribution<Int> small(0, 5), coef(-3, 3), wide(-30, 30);

  // RectUnion laws.
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + i % 3;
    auto rnd = [&]() {
      std::vector<HyperRect> rs;
      for (int k = 0; k < 3; ++k) {
        HyperRect r{IntVec(n), IntVec(n)};
        for (std::size_t d = 0; d < n; ++d) {
          r.lo[d] = small(rng);
          r.hi[d] = r.lo[d] + 1 + small(rng);
        }
        rs.push_back(r);
      }
      return RectUnion(n, rs);
    };
    const RectUnion a = rnd(), b = rnd();
    check((a | b).size().value + (a & b).size().value == a.size().value + b.size().value, "|AuB|+|AnB|=|A|+|B|");
    check(((a - b) & b).empty(), "(A-B)nB empty");
    std::vector<HyperRect> unit;
    for (const auto& p : a.points()) unit.push_back(HyperRect{p, add(p, IntVec(n, 1))});
    check(RectUnion(n, unit).rects() == a.rects(), "canonical form unique");
  }

  // rho soundness and idempotence; A1 and X1 shape; borders.
  std::vector<Lattice> lats;
  for (int i = 0; i < 50; ++i) lats.push_back(t::random_lattice(rng, i % 2 == 0 ? 2 : 3, 4, 60));
  int oracle_runs = 0;
  for (std::size_t li = 0; li < lats.size(); ++li) {
    const Lattice& lat = lats[li];
    const std::size_t n = lat.dim();
    for (int k = 0; k < 30; ++k) {
      IntVec b(n);
      for (auto& x : b) x = wide(rng);
      const IntVec r = lat.rho(b);
      check(lat.contains(sub(b, r)) && lat.in_domain(r) && lat.rho(r) == r, "rho sound and idempotent");
    }
    const auto a1 = compute_A1(lat);
    const auto x1 = compute_X1(lat);
    check(is_antichain(a1), "A1 antichain");
    for (const auto& p : x1) {
      check(std::find(x1.begin(), x1.end(), p.swapped()) != x1.end(), "X1 swap closed");
      for (const auto& q : x1)
        if (q != p && q != p.swapped()) check(!pair_leq(q, p), "X1 antichain under the pair order");
    }
    for (int k = 0; k < 40; ++k) {
      IntVec v(n, 0);
      for (const auto& row : lat.hnf()) v = add(v, scale(coef(rng), row));
      if (is_zero(v)) continue;
      const auto d = decompose(v);
      check(std::any_of(a1.begin(), a1.end(), [&](const NatVec& x) { return leq(x, d.abs); }), "A1 dominates");
      if (!is_zero(d.plus) && !is_zero(d.minus))
        check(std::any_of(x1.begin(), x1.end(), [&](const XPair& q) { return pair_leq(q, {d.plus, d.minus}); }),
              "X1 dominates");
    }

    const IdealSearch s = find_maximal_ideals(lat);
    if (li % 5 == 0)
      for (const auto& o : s.ideals) {
        if (!is_max_compatible(o, lat)) continue;
        Int w = 0;
        for (const auto& p : o.points()) w = std::max(w, *std::max_element(p.begin(), p.end()));
        check(t::check_border_families(o, lat, border_families(o, lat), w + 3).empty(), "border partition, delta in M");
      }

    try {
      auto direct = oracle::direct_maximal_ideals(lat);
      std::vector<std::vector<NatVec>> pipe;
      for (const auto& o : s.ideals) pipe.push_back(t::sorted_points(o));
      check(sorted(pipe) == direct, "oracle equals pipeline");
      ++oracle_runs;
    } catch (const std::length_error&) {
      // V above the oracle cap.
    }
  }
  check(oracle_runs >= 40, "oracle ran on at least 40 of 50 lattices (ran " + std::to_string(oracle_runs) + ")");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  void (*run)(Check&);
  bool slow;
};

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--slow")) {
      slow = true;
    } else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--slow] [--only N]\n");
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "plane example golden values", 1, plane_example, false},
      {2, "rank-2 lattice in Z^3 golden values", 5, space_example, false},
      {3, "border and reduction table", 5, reduction_table, false},
      {4, "35 ideals, 33 realizable, O1 and O2 fail", 30, counterexample, false},
      {5, "rank-3 example: 23 ideals, one maximal but not max-compatible", 10, rank_three, false},
      {6, "minimality scan of 3x3 matrices", 600, minimality_scan, true},
      {7, "dim2 closed form equals the region graph", 30, plane_cross_check, false},
      {8, "property suites and oracle equivalence", 120, property_suites, false},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    if (c.slow && !slow) {
      std::printf("[SKIP] criterion %d: %s (opt-in, run with --slow)\n", c.id, c.name);
      continue;
    }
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) check(false, "took longer than " + std::to_string(c.limit_seconds) + " s");
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs, ok ? "" : " - ",
                check.summary().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
