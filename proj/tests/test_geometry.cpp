#include "doctest.h"

#include <fstream>
#include <sstream>

#include "nc/families.hpp"
#include "nc/geometry.hpp"
#include "nc/graph.hpp"
#include "oracles.hpp"

using namespace nc;
using namespace nc::geom;

namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(NC_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Realization fixture(const std::string& name) { return parse_realization(read(name)); }

Rational q(const char* s) { return parse_rational(s); }

Codeword word(const Realization& r, std::initializer_list<const char*> labels) {
  std::vector<std::string> l(labels.begin(), labels.end());
  return codeword_from_labels(r.universe(), l);
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

// Exact code of a union of axis-aligned boxes: membership factors into an x
// part and a y part, so one sample per cell of the breakpoint grid suffices.
Code box_code(const Realization& r) {
  std::vector<Rational> xs, ys;
  for (const auto& region : r.regions())
    for (const auto& h : region.halfspaces) {
      if (h.normal[1] == 0) xs.push_back(h.offset / h.normal[0]);
      if (h.normal[0] == 0) ys.push_back(h.offset / h.normal[1]);
    }
  auto samples = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<Rational> out{v.front() - 1, v.back() + 1};
    for (std::size_t k = 0; k < v.size(); ++k) {
      out.push_back(v[k]);
      if (k + 1 < v.size()) out.push_back((v[k] + v[k + 1]) / 2);
    }
    return out;
  };
  std::set<std::uint64_t> seen;
  for (const auto& x : samples(xs))
    for (const auto& y : samples(ys)) seen.insert(membership(r, Point{x, y}).bits());
  std::vector<Codeword> words;
  for (auto b : seen) words.emplace_back(b);
  return Code(r.universe(), words);
}

Point lerp(const Point& a, const Point& b, const Rational& t) {
  Point p(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + t * (b[i] - a[i]);
  return p;
}

// Runs partition [0,1] and each run's codeword holds at its ends and at
// random interior parameters.
void check_trace_shape(const Realization& r, const AtomTrace& t, test::Rng& rng) {
  REQUIRE_FALSE(t.runs.empty());
  CHECK(t.runs.front().lo == 0);
  CHECK(t.runs.front().lo_closed);
  CHECK(t.runs.back().hi == 1);
  CHECK(t.runs.back().hi_closed);
  for (std::size_t k = 0; k < t.runs.size(); ++k) {
    const auto& run = t.runs[k];
    CHECK(run.lo <= run.hi);
    if (run.lo == run.hi) CHECK((run.lo_closed && run.hi_closed));
    if (k + 1 < t.runs.size()) {
      const auto& next = t.runs[k + 1];
      CHECK(run.hi == next.lo);
      CHECK(run.hi_closed != next.lo_closed);
      CHECK(run.codeword != next.codeword);
    }
    if (run.lo_closed) CHECK(membership(r, lerp(t.from, t.to, run.lo)) == run.codeword);
    if (run.hi_closed) CHECK(membership(r, lerp(t.from, t.to, run.hi)) == run.codeword);
    for (int s = 0; s < 3 && run.lo < run.hi; ++s) {
      const Rational u(static_cast<long long>(rng() % 997 + 1), 999);
      CHECK(membership(r, lerp(t.from, t.to, run.lo + u * (run.hi - run.lo))) == run.codeword);
    }
  }
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(format_rational(q("-1/2")) == "-1/2");
  CHECK(format_rational(q("4/6")) == "2/3");
  CHECK(format_rational(q("-1.5")) == "-3/2");
  CHECK(format_rational(q("1.70")) == "17/10");
  CHECK(format_rational(q(" 7 ")) == "7");
  CHECK(format_rational(q(".5")) == "1/2");
  CHECK(format_rational(q("-0")) == "0");
  for (const char* bad : {"", "1/0", "abc", "1/-2", "1.2.3", "--1", "."}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { parse_rational(bad); }) == ErrorKind::Parse);
  }
  CHECK(format_point(parse_point("0,-3/4")) == "0,-3/4");
}

TEST_CASE("membership on the prism fixture") {
  const auto r = fixture("p1_open.json");
  CHECK(membership(r, {q("1/2")}) == word(r, {"1bar", "2bar", "3bar"}));
  CHECK(membership(r, {q("-1/2")}) == word(r, {"2bar"}));  // boundary of an open interval
  CHECK(membership(r, {q("-2")}) == Codeword());
  CHECK(kind_of([&] { membership(r, {q("0"), q("0")}); }) == ErrorKind::DimensionError);
  const auto closed = fixture("p1_closed.json");
  CHECK(membership(closed, {q("-1/2")}) == word(closed, {"1", "2bar"}));
}

TEST_CASE("whole-space region") {
  const Realization r(2, Topology::Open, {ConvexRegion{"all", {}}});
  test::Rng rng(51);
  for (int k = 0; k < 20; ++k) {
    const Point p{test::random_rational(rng, 50, 9), test::random_rational(rng, 50, 9)};
    CHECK(membership(r, p) == Codeword::of({0}));
  }
}

TEST_CASE("realization validation") {
  CHECK(kind_of([] { parse_realization(read("mixed_sense.json")); }) == ErrorKind::RealizationMalformed);
  CHECK(kind_of([] {
          parse_realization(R"({"dimension":1,"topology":"open","regions":[{"label":"1","halfspaces":[{"normal":["0"],"offset":"1"}]}]})");
        }) == ErrorKind::RealizationMalformed);
  CHECK(kind_of([] {
          parse_realization(R"({"dimension":2,"topology":"open","regions":[{"label":"1","halfspaces":[{"normal":["1"],"offset":"1"}]}]})");
        }) == ErrorKind::RealizationMalformed);
  CHECK(kind_of([] {
          parse_realization(R"({"dimension":1,"topology":"open","regions":[{"label":"1"},{"label":"1"}]})");
        }) == ErrorKind::RealizationMalformed);
  CHECK(kind_of([] { parse_realization(R"({"dimension":1,"topology":"fuzzy","regions":[]})"); }) ==
        ErrorKind::RealizationMalformed);
  CHECK(kind_of([] { parse_realization("{"); }) == ErrorKind::Parse);
  const Realization closed(1, Topology::Closed, {ConvexRegion{"1", {HalfSpace{{q("1")}, q("0"), Sense::NonStrict}}}});
  CHECK(kind_of([&] {
          Realization(1, Topology::Closed, {ConvexRegion{"1", {HalfSpace{{q("1")}, q("0"), Sense::Strict}}}});
        }) == ErrorKind::RealizationMalformed);
}

TEST_CASE("realization JSON round trip") {
  for (const char* name : {"p1_open.json", "p1_closed.json", "boxes_2d.json"}) {
    const auto r = fixture(name);
    const auto again = parse_realization(serialize_realization(r));
    CHECK(serialize_realization(again) == serialize_realization(r));
    CHECK(again.universe() == r.universe());
  }
}

TEST_CASE("witnesses on the prism fixture") {
  const auto r = fixture("p1_open.json");
  const auto rep = verify_witnesses(r, parse_witness_claims(r, read("p1_witnesses.json")));
  CHECK(rep.checks.size() == 8);
  CHECK(rep.all_pass());
  std::set<std::uint64_t> claimed;
  for (const auto& c : rep.checks) claimed.insert(c.claimed.bits());
  const Code p1 = gen_Pd(1);
  CHECK(claimed.size() == p1.size());

  const auto wrong = verify_witnesses(r, parse_witness_claims(r, read("p1_wrong_witness.json")));
  REQUIRE(wrong.checks.size() == 1);
  CHECK_FALSE(wrong.all_pass());
  CHECK(*wrong.checks[0].actual == word(r, {"1bar", "2bar", "3bar"}));
  CHECK(verify_witnesses(r, {}).all_pass());
  const auto bad_dim = verify_witnesses(r, {{Codeword(), Point{q("0"), q("0")}}});
  CHECK_FALSE(bad_dim.all_pass());
  CHECK_FALSE(bad_dim.checks[0].actual);
}

TEST_CASE("exact code on the line") {
  CHECK(code_of_1d_realization(fixture("p1_open.json")) == gen_Pd(1));
  CHECK(code_of_1d_realization(fixture("p1_closed.json")) == gen_Pd(1));
  const Realization none(1, Topology::Open, {});
  const Code empty = code_of_1d_realization(none);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());
  const Realization one(1, Topology::Open,
                        {ConvexRegion{"1", {HalfSpace{{q("1")}, q("1"), Sense::Strict}, HalfSpace{{q("-1")}, q("0"), Sense::Strict}}}});
  CHECK(code_of_1d_realization(one) == parse_code_text("{},1"));
  CHECK(kind_of([] { code_of_1d_realization(fixture("boxes_2d.json")); }) == ErrorKind::DimensionError);
}

TEST_CASE("exact 1D code survives dense random sampling") {
  test::Rng rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ConvexRegion> regions;
    const auto topology = trial % 2 ? Topology::Closed : Topology::Open;
    const auto sense = trial % 2 ? Sense::NonStrict : Sense::Strict;
    for (int i = 0; i < 4; ++i) {
      const Rational a = test::random_rational(rng, 5, 4);
      const Rational b = test::random_rational(rng, 5, 4);
      regions.push_back({std::to_string(i + 1),
                         {HalfSpace{{Rational(1)}, std::max(a, b), sense}, HalfSpace{{Rational(-1)}, -std::min(a, b), sense}}});
    }
    const Realization r(1, topology, regions);
    const Code code = code_of_1d_realization(r);
    std::set<std::uint64_t> hit;
    for (int k = 0; k < 2000; ++k) {
      const auto w = membership(r, {test::random_rational(rng, 7, 8)});
      CHECK(code.contains(w));
      hit.insert(w.bits());
    }
    CHECK(hit.size() <= code.size());
  }
}

TEST_CASE("trace across the prism fixture") {
  const auto r = fixture("p1_open.json");
  const auto t = segment_atom_trace(r, {q("-3/2")}, {q("1/2")});
  std::vector<Codeword> expected{word(r, {"1"}), word(r, {"1", "2bar"}), word(r, {"2bar"}), word(r, {"1bar", "2bar", "3bar"})};
  CHECK(t.codewords() == expected);
  test::Rng rng(53);
  check_trace_shape(r, t, rng);
}

TEST_CASE("trace inside one atom") {
  const auto r = fixture("p1_open.json");
  const auto t = segment_atom_trace(r, {q("-3/2")}, {q("-7/5")});
  REQUIRE(t.runs.size() == 1);
  CHECK(t.runs[0].codeword == word(r, {"1"}));
}

TEST_CASE("closed realizations keep zero-length runs") {
  const Realization r(1, Topology::Closed,
                      {ConvexRegion{"1", {HalfSpace{{q("1")}, q("0"), Sense::NonStrict}}},
                       ConvexRegion{"2", {HalfSpace{{q("-1")}, q("0"), Sense::NonStrict}}}});
  const auto t = segment_atom_trace(r, {q("-1")}, {q("1")});
  REQUIRE(t.runs.size() == 3);
  CHECK(t.runs[1].codeword == Codeword::of({0, 1}));
  CHECK(t.runs[1].lo == t.runs[1].hi);
}

TEST_CASE("trace errors") {
  const auto r = fixture("p1_open.json");
  CHECK(kind_of([&] { segment_atom_trace(r, {q("1")}, {q("1")}); }) == ErrorKind::DegenerateSegment);
  CHECK(kind_of([&] { segment_atom_trace(r, {q("1")}, {q("1"), q("2")}); }) == ErrorKind::DimensionError);
}

TEST_CASE("random traces are feasible walks of the fixture code and reverse cleanly") {
  test::Rng rng(54);
  for (const char* name : {"p1_open.json", "p1_closed.json", "boxes_2d.json"}) {
    CAPTURE(name);
    const auto r = fixture(name);
    const Code code = r.dimension() == 1 ? code_of_1d_realization(r) : box_code(r);
    for (int k = 0; k < 150; ++k) {
      Point a, b;
      for (std::size_t i = 0; i < r.dimension(); ++i) {
        a.push_back(test::random_rational(rng, 5, 6));
        b.push_back(test::random_rational(rng, 5, 6));
      }
      if (a == b) continue;
      const auto t = segment_atom_trace(r, a, b);
      check_trace_shape(r, t, rng);
      const auto ws = t.codewords();
      for (const auto& w : ws) REQUIRE(code.contains(w));
      CHECK(is_feasible_walk(code, ws).feasible);
      auto back = segment_atom_trace(r, b, a).codewords();
      std::reverse(back.begin(), back.end());
      CHECK(back == ws);
    }
  }
}
