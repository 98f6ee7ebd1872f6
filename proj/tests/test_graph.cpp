#include "doctest.h"

#include <array>

#include "nc/families.hpp"
#include "nc/graph.hpp"
#include "oracles.hpp"

using namespace nc;

namespace {

Walk walk(const Code& c, std::initializer_list<const char*> ws) {
  Walk w;
  for (const char* s : ws) w.push_back(parse_codeword(c.universe(), s));
  return w;
}

Codeword cw(const Code& c, const char* s) { return parse_codeword(c.universe(), s); }

std::vector<test::IndexPath> indices(const Code& c, const std::vector<Walk>& ws) {
  std::vector<test::IndexPath> out;
  for (const auto& w : ws) {
    test::IndexPath p;
    for (const auto& v : w) p.push_back(c.require_index(v));
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an nc::Error");
  return ErrorKind::Parse;
}

const Code& ex23() {
  static const Code c = registry("example2.3").code;
  return c;
}

}  // namespace

TEST_CASE("codeword graph of the eight-word example") {
  const Code& c = ex23();
  const CodewordGraph g(c);
  // Hand-listed containments: {} under everything, 13<1235, 14<1245,
  // 15<125,1235,1245,1256, 125<1235,1245,1256.
  CHECK(g.edge_count() == 16);
  auto nb = [&](const char* s) {
    Walk out;
    for (auto u : g.neighbors(c.require_index(cw(c, s)))) out.push_back(c[u]);
    return format_codeword_list(c.universe(), out, ",");
  };
  CHECK(nb("125") == "{},15,1235,1245,1256");
  CHECK(nb("13") == "{},1235");
  CHECK(nb("14") == "{},1245");
  CHECK(nb("15") == "{},125,1235,1245,1256");
  CHECK(nb("1256") == "{},15,125");
  CHECK(g.adjacent(c.require_index(cw(c, "13")), c.require_index(cw(c, "1235"))));
  CHECK_FALSE(g.adjacent(c.require_index(cw(c, "13")), c.require_index(cw(c, "14"))));
}

TEST_CASE("graph edge rule agrees with direct containment") {
  test::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Code c = test::random_code(rng, 6, 20);
    const CodewordGraph g(c);
    std::size_t edges = 0;
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = 0; b < c.size(); ++b) {
        const bool e = test::comparable(c[a].bits(), c[b].bits());
        CHECK(g.adjacent(a, b) == e);
        edges += e && a < b;
      }
    CHECK(g.edge_count() == edges);
    CHECK(g.edges().size() == edges);
  }
}

TEST_CASE("small graphs") {
  CHECK(CodewordGraph(parse_code_text("{}")).edge_count() == 0);
  // 7 edges at the empty word, then 1<{1,2bar}, 2<{2,1bar}, 1bar and 2bar
  // each under two words.
  CHECK(CodewordGraph(gen_Pd(1)).edge_count() == 13);
}

TEST_CASE("feasibility of explicit walks") {
  const Code& c = ex23();
  const auto bad = is_feasible_walk(c, walk(c, {"13", "1235", "15", "1245", "14"}));
  CHECK_FALSE(bad.feasible);
  REQUIRE(bad.violation);
  CHECK(bad.violation->i == 2);
  CHECK(bad.violation->m == 3);
  CHECK(bad.violation->j == 4);
  CHECK(is_feasible_walk(c, walk(c, {"13", "1235", "125", "1245", "14"})).feasible);
  CHECK(is_feasible_walk(c, walk(c, {"13"})).feasible);
  CHECK(is_feasible_walk(c, walk(c, {"13", "1235"})).feasible);
  CHECK(kind_of([&] { is_feasible_walk(c, walk(c, {"13", "14"})); }) == ErrorKind::NotAWalk);
  CHECK(kind_of([&] { is_feasible_walk(c, walk(c, {"13", "12"})); }) == ErrorKind::UnknownCodeword);
  CHECK(kind_of([&] { is_feasible_walk(c, Walk{}); }) == ErrorKind::NotAWalk);
}

TEST_CASE("reported violation is the lexicographically first triple") {
  test::Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const Code c = test::random_code(rng, 5, 14);
    const auto walks = test::brute_force_walks(c, 0, c.size() - 1, 4);
    // Random walks of up to six vertices, feasible or not.
    test::IndexPath w{static_cast<std::size_t>(rng() % c.size())};
    for (int step = 0; step < 5; ++step) {
      std::vector<std::size_t> nb;
      for (std::size_t v = 0; v < c.size(); ++v)
        if (test::comparable(c[w.back()].bits(), c[v].bits())) nb.push_back(v);
      if (nb.empty()) break;
      w.push_back(nb[rng() % nb.size()]);
    }
    Walk ws;
    for (auto v : w) ws.push_back(c[v]);
    const auto r = is_feasible_walk(c, ws);
    CHECK(r.feasible == test::triples_ok(c, w));
    if (r.violation) {
      const auto [i, m, j] = *r.violation;
      CHECK((ws[i - 1] & ws[j - 1]).is_subset_of(ws[m - 1]) == false);
      std::array<std::size_t, 3> first{};
      for (std::size_t a = 0; a < w.size() && first[0] == 0; ++a)
        for (std::size_t b = a + 1; b < w.size() && first[0] == 0; ++b)
          for (std::size_t d = b + 1; d < w.size() && first[0] == 0; ++d)
            if (!(ws[a] & ws[d]).is_subset_of(ws[b])) first = {a + 1, b + 1, d + 1};
      CHECK(first == std::array<std::size_t, 3>{i, m, j});
    }
    for (const auto& fw : walks) {
      Walk x;
      for (auto v : fw) x.push_back(c[v]);
      CHECK(is_feasible_walk(c, x).feasible);
    }
  }
}

TEST_CASE("unique feasible path in the eight-word example") {
  const Code& c = ex23();
  const auto paths = enumerate_feasible_paths(c, cw(c, "13"), cw(c, "14"));
  REQUIRE(paths.size() == 1);
  CHECK(format_codeword_list(c.universe(), paths[0], ",") == "13,1235,125,1245,14");
}

TEST_CASE("paths from a word to itself") {
  const Code& c = ex23();
  for (const auto& v : c.codewords()) {
    const auto paths = enumerate_feasible_paths(c, v, v);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0] == Walk{v});
  }
}

TEST_CASE("first R path") {
  const Code r = registry("R").code;
  const auto paths = enumerate_feasible_paths(r, cw(r, "12ab"), cw(r, "14ch"));
  REQUIRE(paths.size() == 1);
  CHECK(format_codeword_list(r.universe(), paths[0], ",") == "12ab,1a,13ace,1c,14ch");
}

TEST_CASE("path enumeration equals the brute-force filter") {
  const Code& c = ex23();
  const auto s = c.require_index(cw(c, "14"));
  const auto t = c.require_index(cw(c, "15"));
  CHECK(indices(c, enumerate_feasible_paths(c, c[s], c[t])) == test::brute_force_paths(c, s, t));

  test::Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const Code r = test::random_code(rng, 2 + trial % 5, 12, trial % 3 != 0);
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = 0; b < r.size(); ++b)
        CHECK(indices(r, enumerate_feasible_paths(r, r[a], r[b])) == test::brute_force_paths(r, a, b));
  }
}

TEST_CASE("forced between") {
  const Code& c = ex23();
  CHECK(format_codeword_list(c.universe(), forced_between(c, cw(c, "14"), cw(c, "15")), ",") == "14,15,1245");
  const Code w = registry("wheel").code;
  const auto f = forced_between(w, cw(w, "125"), cw(w, "123"));
  CHECK(std::find(f.begin(), f.end(), cw(w, "12")) != f.end());
  for (const auto& v : c.codewords()) CHECK(forced_between(c, v, v) == std::vector<Codeword>{v});
  const Code apart = parse_code_text("1,2");
  CHECK(kind_of([&] { forced_between(apart, cw(apart, "1"), cw(apart, "2")); }) == ErrorKind::NoFeasiblePath);
}

TEST_CASE("order forcing") {
  const Code w = registry("wheel").code;
  CHECK(is_order_forced(w, walk(w, {"123", "23", "234", "34", "345"})));
  CHECK_FALSE(is_order_forced(w, walk(w, {"123", "34", "23", "345"})));
  const Code t = registry("T").code;
  CHECK(is_order_forced(t, walk(t, {"16bg", "6g", "26dgh", "6h", "36fh"})));
  const Code& c = ex23();
  CHECK(is_order_forced(c, walk(c, {"14", "15"})));
  const Code apart = parse_code_text("1,2");
  CHECK(kind_of([&] { is_order_forced(apart, walk(apart, {"1", "2"})); }) == ErrorKind::NoFeasiblePath);
}

TEST_CASE("order forcing agrees with subsequence checks over oracle paths") {
  test::Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const Code c = test::random_code(rng, 5, 12);
    const std::size_t s = rng() % c.size();
    const std::size_t t = rng() % c.size();
    const auto paths = test::brute_force_paths(c, s, t);
    if (paths.empty()) continue;
    const auto& p = paths[rng() % paths.size()];
    test::IndexPath seq{p.front()};
    for (std::size_t k = 1; k + 1 < p.size(); ++k)
      if (rng() % 2) seq.push_back(p[k]);
    if (p.size() > 1) seq.push_back(p.back());
    bool expected = true;
    for (const auto& q : paths) {
      std::size_t k = 0;
      for (auto v : q)
        if (k < seq.size() && v == seq[k]) ++k;
      expected &= k == seq.size();
    }
    Walk ws;
    for (auto v : seq) ws.push_back(c[v]);
    CHECK(is_order_forced(c, ws) == expected);
  }
}

TEST_CASE("strong order forcing on the seven-neuron example") {
  const Code c = registry("example2.8").code;
  const Walk p = walk(c, {"145", "45", "2456", "46", "467", "47", "347"});
  const auto r = check_strongly_order_forced(c, p);
  CHECK(r.walk_bound == 24);
  CHECK(r.strongly_forced);
  const auto oracle = test::brute_force_walks(c, c.require_index(p.front()), c.require_index(p.back()), 24);
  REQUIRE(oracle.size() == 1);
}

TEST_CASE("strong order forcing matches the bounded walk oracle") {
  const Code& c = ex23();
  const Walk p = walk(c, {"13", "1235", "125", "1245", "14"});
  const auto oracle = test::brute_force_walks(c, c.require_index(p.front()), c.require_index(p.back()), 16, 2);
  const bool expected = oracle.size() == 1;
  CHECK(is_strongly_order_forced(c, p) == expected);
  CHECK_FALSE(expected);

  test::Rng rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const Code r = test::random_code(rng, 4, 9);
    const std::size_t s = rng() % r.size();
    const std::size_t t = rng() % r.size();
    const auto paths = test::brute_force_paths(r, s, t);
    if (paths.empty()) continue;
    Walk ws;
    for (auto v : paths.front()) ws.push_back(r[v]);
    const std::size_t bound = 2 * r.size();
    const auto walks = test::brute_force_walks(r, s, t, bound, 2);
    const bool want = walks.size() == 1 && walks.front() == paths.front();
    CHECK(is_strongly_order_forced(r, ws, bound) == want);
  }
}

TEST_CASE("walk bound override") {
  const Code c = registry("example2.8").code;
  CHECK(default_walk_bound(c) == 24);
  const Walk p = walk(c, {"145", "45", "2456", "46", "467", "47", "347"});
  CHECK(check_strongly_order_forced(c, p, 9).walk_bound == 9);
  CHECK(kind_of([&] { check_strongly_order_forced(c, walk(c, {"145", "45", "46"})); }) == ErrorKind::NotAWalk);
  // Any infeasible three-vertex walk with distinct endpoints.
  bool found = false;
  for (std::size_t a = 0; a < c.size() && !found; ++a)
    for (std::size_t b = 0; b < c.size() && !found; ++b)
      for (std::size_t d = 0; d < c.size() && !found; ++d) {
        if (a == d || !test::comparable(c[a].bits(), c[b].bits()) || !test::comparable(c[b].bits(), c[d].bits())) continue;
        const Walk w{c[a], c[b], c[d]};
        if (is_feasible_walk(c, w).feasible) continue;
        found = true;
        CHECK(kind_of([&] { check_strongly_order_forced(c, w); }) == ErrorKind::InfeasibleWalk);
      }
  CHECK(found);
}

TEST_CASE("a single vertex is strongly forced only when isolated") {
  const Code lone = parse_code_text("1,2");
  CHECK(is_strongly_order_forced(lone, walk(lone, {"1"})));
  const Code pair = parse_code_text("1,12");
  CHECK_FALSE(is_strongly_order_forced(pair, walk(pair, {"1"})));
}

TEST_CASE("reducing walks to paths") {
  const Code& c = ex23();
  const Walk p = walk(c, {"13", "1235", "125", "1245", "14"});
  CHECK(reduce_walk_to_path(c, p) == p);
  const Code pair = parse_code_text("1,12");
  CHECK(reduce_walk_to_path(pair, walk(pair, {"1", "12", "1"})) == walk(pair, {"1"}));
  CHECK(kind_of([&] { reduce_walk_to_path(c, walk(c, {"13", "1235", "15", "1245", "14"})); }) ==
        ErrorKind::InfeasibleWalk);

  test::Rng rng(36);
  for (int trial = 0; trial < 60; ++trial) {
    const Code r = test::random_code(rng, 4, 9);
    const std::size_t s = rng() % r.size();
    const std::size_t t = rng() % r.size();
    for (const auto& w : test::brute_force_walks(r, s, t, 7, 200)) {
      Walk ws;
      for (auto v : w) ws.push_back(r[v]);
      const Walk q = reduce_walk_to_path(r, ws);
      CHECK(q.front() == ws.front());
      CHECK(q.back() == ws.back());
      CHECK(is_feasible_walk(r, q).feasible);
      std::set<std::uint64_t> seen;
      for (const auto& v : q) CHECK(seen.insert(v.bits()).second);
    }
  }
}

TEST_CASE("the two path oracles agree") {
  test::Rng rng(77);
  for (int k = 0; k < 60; ++k) {
    const Code c = test::random_code(rng, 5, 11);
    for (std::size_t s = 0; s < c.size(); ++s)
      for (std::size_t t = 0; t < c.size(); ++t)
        if (s != t) CHECK(test::prefix_pruned_paths(c, s, t) == test::brute_force_paths(c, s, t));
  }
}
