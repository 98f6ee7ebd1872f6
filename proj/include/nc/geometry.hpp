#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nc/core.hpp"

namespace nc::geom {

/// Arbitrary-precision rational in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Point = std::vector<Rational>;

/// Accepts "p", "p/q" and finite decimals such as "-1.5". Throws Parse.
Rational parse_rational(std::string_view text);
/// "p" for integers, otherwise "p/q".
std::string format_rational(const Rational& r);

/// Comma-separated coordinates: "1/2" or "0,-3/4".
Point parse_point(std::string_view text);
std::string format_point(const Point& p);

enum class Topology { Open, Closed };
enum class Sense { Strict, NonStrict };

/// {x : normal·x < offset} (strict) or {x : normal·x <= offset}.
struct HalfSpace {
  std::vector<Rational> normal;
  Rational offset;
  Sense sense = Sense::Strict;

  bool contains(const Point& x) const;
};

struct ConvexRegion {
  std::string label;
  std::vector<HalfSpace> halfspaces;  // empty means the whole space

  bool contains(const Point& x) const;
};

/// Labelled convex regions, all open or all closed. The region labels, in
/// order, form the neuron universe of every codeword produced from it.
class Realization {
 public:
  /// Throws RealizationMalformed on a zero normal, a dimension mismatch,
  /// duplicate labels, or a half-space whose sense disagrees with `topology`.
  Realization(std::size_t dimension, Topology topology, std::vector<ConvexRegion> regions);

  std::size_t dimension() const noexcept { return dimension_; }
  Topology topology() const noexcept { return topology_; }
  const std::vector<ConvexRegion>& regions() const noexcept { return regions_; }
  const NeuronUniverse& universe() const noexcept { return universe_; }

 private:
  std::size_t dimension_;
  Topology topology_;
  std::vector<ConvexRegion> regions_;
  NeuronUniverse universe_;
};

/// JSON: {"dimension": 1, "topology": "open", "regions": [{"label": "1",
/// "halfspaces": [{"normal": ["1"], "offset": "-1/2"}]}]}. A half-space may
/// carry "sense": "strict" | "nonstrict", which must match the topology.
Realization parse_realization(std::string_view json_text);
std::string serialize_realization(const Realization& r);

/// The labels whose regions contain x. Throws DimensionError.
Codeword membership(const Realization& r, const Point& x);

struct WitnessCheck {
  Codeword claimed;
  Point point;
  std::optional<Codeword> actual;  // missing when the point has the wrong dimension
  bool pass = false;
};

struct WitnessReport {
  std::vector<WitnessCheck> checks;

  bool all_pass() const;
};

/// Each passing claim proves that its codeword occurs in code(r).
WitnessReport verify_witnesses(const Realization& r, const std::vector<std::pair<Codeword, Point>>& claims);

/// Claims file: {"claims": [{"codeword": ["1"], "point": ["-3/2"]}, ...]}.
std::vector<std::pair<Codeword, Point>> parse_witness_claims(const Realization& r, std::string_view json_text);

/// Exact code of a realization on the line: membership at every half-space
/// breakpoint, at one point inside each gap between consecutive breakpoints,
/// and on both unbounded rays. Throws DimensionError unless dimension is 1.
Code code_of_1d_realization(const Realization& r);

/// One maximal stretch of constant membership along a segment, in the
/// parameter t ∈ [0,1] of a + t(b − a).
struct Run {
  Codeword codeword;
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;
};

struct AtomTrace {
  Point from;
  Point to;
  std::vector<Run> runs;

  std::vector<Codeword> codewords() const;
};

/// Throws DegenerateSegment when a == b and DimensionError on a mismatch.
AtomTrace segment_atom_trace(const Realization& r, const Point& a, const Point& b);

}  // namespace nc::geom
