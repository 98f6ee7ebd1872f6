#include "nc/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "json.hpp"

namespace nc::geom {

using boost::multiprecision::cpp_int;

// ---- rationals --------------------------------------------------------------------

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Rational parse_decimal(std::string_view s, std::string_view original) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  const std::string_view whole = s.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
      (dot != std::string_view::npos && !frac.empty() && !all_digits(frac)) ||
      (dot != std::string_view::npos && whole.empty() && frac.empty())) {
    throw Error(ErrorKind::Parse, "not a rational: '" + std::string(original) + "'");
  }
  cpp_int numerator(std::string(whole.empty() ? "0" : whole) + std::string(frac));
  cpp_int denominator = pow(cpp_int(10), static_cast<unsigned>(frac.size()));
  Rational r(numerator, denominator);
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return parse_decimal(t, text);
  const std::string_view den = trim(t.substr(slash + 1));
  if (!all_digits(den)) throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
  const Rational num = parse_decimal(trim(t.substr(0, slash)), text);
  const cpp_int d(std::string{den});
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return num / Rational(d);
}

std::string format_rational(const Rational& r) {
  const cpp_int& den = boost::multiprecision::denominator(r);
  const cpp_int& num = boost::multiprecision::numerator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Point parse_point(std::string_view text) {
  Point p;
  std::size_t pos = 0;
  const std::string_view t = trim(text);
  if (t.empty()) throw Error(ErrorKind::Parse, "empty point");
  while (true) {
    const auto end = t.find(',', pos);
    p.push_back(parse_rational(t.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos)));
    if (end == std::string_view::npos) return p;
    pos = end + 1;
  }
}

std::string format_point(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += format_rational(p[i]);
  }
  return out;
}

// ---- regions -----------------------------------------------------------------------------

namespace {

Rational dot(const std::vector<Rational>& a, const Point& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

bool HalfSpace::contains(const Point& x) const {
  const Rational v = dot(normal, x);
  return sense == Sense::Strict ? v < offset : v <= offset;
}

bool ConvexRegion::contains(const Point& x) const {
  return std::all_of(halfspaces.begin(), halfspaces.end(), [&](const HalfSpace& h) { return h.contains(x); });
}

namespace {

NeuronUniverse region_universe(const std::vector<ConvexRegion>& regions) {
  std::vector<std::string> labels;
  for (const auto& r : regions) labels.push_back(r.label);
  try {
    return NeuronUniverse(std::move(labels));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UniverseTooLarge) throw;
    throw Error(ErrorKind::RealizationMalformed, e.what());
  }
}

}  // namespace

Realization::Realization(std::size_t dimension, Topology topology, std::vector<ConvexRegion> regions)
    : dimension_(dimension), topology_(topology), regions_(std::move(regions)), universe_(region_universe(regions_)) {
  if (dimension_ == 0) throw Error(ErrorKind::RealizationMalformed, "dimension must be positive");
  const Sense expected = topology_ == Topology::Open ? Sense::Strict : Sense::NonStrict;
  for (const auto& region : regions_) {
    for (const auto& h : region.halfspaces) {
      if (h.normal.size() != dimension_) {
        throw Error(ErrorKind::RealizationMalformed, "region '" + region.label + "' has a normal of length " +
                                                         std::to_string(h.normal.size()) + " in dimension " +
                                                         std::to_string(dimension_));
      }
      if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& v) { return v == 0; })) {
        throw Error(ErrorKind::RealizationMalformed, "region '" + region.label + "' has a zero normal");
      }
      if (h.sense != expected) {
        throw Error(ErrorKind::RealizationMalformed,
                    "region '" + region.label + "' mixes strict and non-strict half-spaces");
      }
    }
  }
}

// ---- JSON ------------------------------------------------------------------------------------

namespace {

Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw Error(ErrorKind::Parse, "rationals must be strings like \"p/q\" or integers");
}

}  // namespace

Realization parse_realization(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  try {
    const auto dimension = j.at("dimension").get<std::size_t>();
    const auto topo = j.at("topology").get<std::string>();
    if (topo != "open" && topo != "closed") {
      throw Error(ErrorKind::RealizationMalformed, "topology must be \"open\" or \"closed\"");
    }
    const Topology topology = topo == "open" ? Topology::Open : Topology::Closed;
    const Sense default_sense = topology == Topology::Open ? Sense::Strict : Sense::NonStrict;
    std::vector<ConvexRegion> regions;
    for (const auto& rj : j.at("regions")) {
      ConvexRegion region{rj.at("label").get<std::string>(), {}};
      for (const auto& hj : rj.value("halfspaces", nlohmann::json::array())) {
        HalfSpace h;
        for (const auto& v : hj.at("normal")) h.normal.push_back(json_rational(v));
        h.offset = json_rational(hj.at("offset"));
        h.sense = default_sense;
        if (hj.contains("sense")) {
          const auto s = hj.at("sense").get<std::string>();
          if (s != "strict" && s != "nonstrict") throw Error(ErrorKind::RealizationMalformed, "unknown sense '" + s + "'");
          h.sense = s == "strict" ? Sense::Strict : Sense::NonStrict;
        }
        region.halfspaces.push_back(std::move(h));
      }
      regions.push_back(std::move(region));
    }
    return Realization(dimension, topology, std::move(regions));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string serialize_realization(const Realization& r) {
  nlohmann::ordered_json j;
  j["dimension"] = r.dimension();
  j["topology"] = r.topology() == Topology::Open ? "open" : "closed";
  auto regions = nlohmann::ordered_json::array();
  for (const auto& region : r.regions()) {
    nlohmann::ordered_json rj;
    rj["label"] = region.label;
    auto hs = nlohmann::ordered_json::array();
    for (const auto& h : region.halfspaces) {
      nlohmann::ordered_json hj;
      auto normal = nlohmann::ordered_json::array();
      for (const auto& v : h.normal) normal.push_back(format_rational(v));
      hj["normal"] = std::move(normal);
      hj["offset"] = format_rational(h.offset);
      hs.push_back(std::move(hj));
    }
    rj["halfspaces"] = std::move(hs);
    regions.push_back(std::move(rj));
  }
  j["regions"] = std::move(regions);
  return j.dump();
}

// ---- membership and witnesses ----------------------------------------------------------------

Codeword membership(const Realization& r, const Point& x) {
  if (x.size() != r.dimension()) {
    throw Error(ErrorKind::DimensionError, "point has " + std::to_string(x.size()) + " coordinates, realization has " +
                                               std::to_string(r.dimension()));
  }
  Codeword c;
  for (std::size_t i = 0; i < r.regions().size(); ++i) {
    if (r.regions()[i].contains(x)) c = c.with(i);
  }
  return c;
}

bool WitnessReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const WitnessCheck& c) { return c.pass; });
}

WitnessReport verify_witnesses(const Realization& r, const std::vector<std::pair<Codeword, Point>>& claims) {
  WitnessReport report;
  for (const auto& [claimed, point] : claims) {
    WitnessCheck check{claimed, point, std::nullopt, false};
    if (point.size() == r.dimension()) {
      check.actual = membership(r, point);
      check.pass = *check.actual == claimed;
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::vector<std::pair<Codeword, Point>> parse_witness_claims(const Realization& r, std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  std::vector<std::pair<Codeword, Point>> claims;
  try {
    for (const auto& cj : j.at("claims")) {
      const auto labels = cj.at("codeword").get<std::vector<std::string>>();
      Point p;
      for (const auto& v : cj.at("point")) p.push_back(json_rational(v));
      claims.emplace_back(codeword_from_labels(r.universe(), labels), std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return claims;
}

// ---- exact 1D code -----------------------------------------------------------------------------

Code code_of_1d_realization(const Realization& r) {
  if (r.dimension() != 1) throw Error(ErrorKind::DimensionError, "exact code extraction needs dimension 1");
  std::vector<Rational> breaks;
  for (const auto& region : r.regions()) {
    for (const auto& h : region.halfspaces) breaks.push_back(h.offset / h.normal[0]);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<Rational> samples;
  if (breaks.empty()) {
    samples.emplace_back(0);
  } else {
    samples.push_back(breaks.front() - 1);
    for (std::size_t k = 0; k < breaks.size(); ++k) {
      samples.push_back(breaks[k]);
      if (k + 1 < breaks.size()) samples.push_back((breaks[k] + breaks[k + 1]) / 2);
    }
    samples.push_back(breaks.back() + 1);
  }
  std::set<std::uint64_t> seen;
  std::vector<Codeword> words;
  for (const auto& s : samples) {
    const Codeword c = membership(r, Point{s});
    if (seen.insert(c.bits()).second) words.push_back(c);
  }
  return Code(r.universe(), std::move(words));
}

// ---- segment traces ---------------------------------------------------------------------------

std::vector<Codeword> AtomTrace::codewords() const {
  std::vector<Codeword> out;
  for (const auto& run : runs) out.push_back(run.codeword);
  return out;
}

AtomTrace segment_atom_trace(const Realization& r, const Point& a, const Point& b) {
  if (a.size() != r.dimension() || b.size() != r.dimension()) {
    throw Error(ErrorKind::DimensionError, "segment endpoints must have " + std::to_string(r.dimension()) + " coordinates");
  }
  if (a == b) throw Error(ErrorKind::DegenerateSegment, "segment endpoints coincide");

  Point direction(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) direction[i] = b[i] - a[i];
  auto at = [&](const Rational& t) {
    Point p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + t * direction[i];
    return p;
  };

  std::vector<Rational> ts{Rational(0), Rational(1)};
  for (const auto& region : r.regions()) {
    for (const auto& h : region.halfspaces) {
      const Rational slope = dot(h.normal, direction);
      if (slope == 0) continue;
      const Rational t = (h.offset - dot(h.normal, a)) / slope;
      if (t > 0 && t < 1) ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  AtomTrace trace{a, b, {}};
  auto append = [&](Run piece) {
    if (!trace.runs.empty() && trace.runs.back().codeword == piece.codeword) {
      trace.runs.back().hi = piece.hi;
      trace.runs.back().hi_closed = piece.hi_closed;
    } else {
      trace.runs.push_back(std::move(piece));
    }
  };
  for (std::size_t k = 0; k < ts.size(); ++k) {
    append(Run{membership(r, at(ts[k])), ts[k], ts[k], true, true});
    if (k + 1 < ts.size()) {
      append(Run{membership(r, at((ts[k] + ts[k + 1]) / 2)), ts[k], ts[k + 1], false, false});
    }
  }
  return trace;
}

}  // namespace nc::geom
