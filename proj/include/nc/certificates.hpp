#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nc/core.hpp"
#include "nc/graph.hpp"

namespace nc {

/// A codeword named by its neuron labels. Resolved against a code at
/// verification time.
using LabelSet = std::vector<std::string>;

struct UniqueFeasiblePath {
  LabelSet from;
  LabelSet to;
  std::vector<LabelSet> path;
  bool strong = false;  // also require uniqueness among bounded walks
};

struct OrderForced {
  std::vector<LabelSet> sequence;
};

struct ForcedBetween {
  LabelSet vertex;
  LabelSet from;
  LabelSet to;
};

struct DisjointNeurons {
  std::string i;
  std::string j;
};

struct CodewordPresent {
  LabelSet codeword;
};

struct CodewordAbsent {
  LabelSet codeword;
};

using Premise = std::variant<UniqueFeasiblePath, OrderForced, ForcedBetween, DisjointNeurons, CodewordPresent,
                             CodewordAbsent>;

/// JSON kind tag: "unique_feasible_path", "order_forced", ...
std::string_view premise_kind(const Premise& p);

struct Certificate {
  std::string code;               // registry name; empty when inline_code is set
  std::optional<Code> inline_code;
  std::vector<Premise> premises;
  std::string narrative;          // not machine-checked
};

struct PremiseResult {
  std::string kind;
  bool pass = false;
  std::string detail;                       // why it failed, empty on a pass
  std::optional<Walk> counterexample;       // a competing path or walk
  std::optional<Codeword> witness;          // e.g. the codeword holding both disjoint neurons
  std::optional<std::size_t> walk_bound;    // strong premises only
};

struct CertificateReport {
  std::vector<PremiseResult> results;  // premise order

  bool all_pass() const;
};

/// Checks every premise against `c`. Label sets naming a neuron outside the
/// universe throw CertificateMalformed; a resolvable label set that is not a
/// codeword makes its premise fail.
CertificateReport verify_certificate(const Code& c, const Certificate& cert);

/// The inline code, or the registry code the certificate names.
Code certificate_code(const Certificate& cert);

/// {"code": "R" | {"neurons":..., "codewords":...}, "premises": [...],
/// "narrative": "..."}. Throws Parse on bad JSON and CertificateMalformed on
/// a structurally invalid certificate (no premises, unknown kind, ...).
Certificate parse_certificate(std::string_view json_text);
std::string serialize_certificate(const Certificate& cert);

/// Names of the shipped certificates: the literal ones in
/// data/certificates.json, then "Ln:1".."Ln:5".
std::vector<std::string> builtin_certificate_names();

/// Throws UnknownCode for a name without a shipped certificate. "Ln:<n>" is
/// accepted for every n >= 1.
Certificate builtin_certificate(std::string_view name);

}  // namespace nc
