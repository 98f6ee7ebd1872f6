#include "nc/certificates.hpp"

#include <algorithm>

#include "embedded_data.inc"
#include "json.hpp"
#include "nc/families.hpp"

namespace nc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_labels(const LabelSet& s) {
  if (s.empty()) return "{}";
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += s[k];
  }
  return out + "}";
}

class Resolver {
 public:
  explicit Resolver(const Code& c) : code_(c) {}

  Codeword word(const LabelSet& labels) const {
    Codeword w;
    for (const auto& l : labels) {
      const auto idx = code_.universe().find(l);
      if (!idx) throw Error(ErrorKind::CertificateMalformed, "unknown neuron '" + l + "' in " + format_labels(labels));
      if (w.contains(*idx)) {
        throw Error(ErrorKind::CertificateMalformed, "neuron '" + l + "' repeated in " + format_labels(labels));
      }
      w = w.with(*idx);
    }
    return w;
  }

  std::size_t neuron(const std::string& label) const {
    const auto idx = code_.universe().find(label);
    if (!idx) throw Error(ErrorKind::CertificateMalformed, "unknown neuron '" + label + "'");
    return *idx;
  }

  // Empty when every word is in the code, else the first offender.
  std::optional<Codeword> missing(std::span<const Codeword> words) const {
    for (const auto& w : words) {
      if (!code_.contains(w)) return w;
    }
    return std::nullopt;
  }

 private:
  const Code& code_;
};

PremiseResult fail(PremiseResult r, std::string detail) {
  r.pass = false;
  r.detail = std::move(detail);
  return r;
}

Walk to_walk(const Code& c, std::span<const std::size_t> p) {
  Walk w;
  for (auto v : p) w.push_back(c[v]);
  return w;
}

std::string not_a_codeword(const Code& c, Codeword w) {
  return format_codeword(c.universe(), w) + " is not a codeword";
}

PremiseResult check(const Code& c, const Resolver& r, const UniqueFeasiblePath& p) {
  PremiseResult res{"unique_feasible_path", false, {}, {}, {}, {}};
  const Codeword from = r.word(p.from);
  const Codeword to = r.word(p.to);
  Walk path;
  for (const auto& l : p.path) path.push_back(r.word(l));
  std::vector<Codeword> all{from, to};
  all.insert(all.end(), path.begin(), path.end());
  if (auto bad = r.missing(all)) return fail(res, not_a_codeword(c, *bad));
  if (path.empty() || path.front() != from || path.back() != to) {
    return fail(res, "the path does not run from " + format_codeword(c.universe(), from) + " to " +
                         format_codeword(c.universe(), to));
  }

  const CodewordGraph g(c);
  std::vector<std::size_t> expected;
  for (const auto& v : path) expected.push_back(c.require_index(v));
  std::size_t found = 0;
  bool matched = false;
  for_each_feasible_path(g, expected.front(), expected.back(), [&](std::span<const std::size_t> q) {
    ++found;
    if (std::equal(q.begin(), q.end(), expected.begin(), expected.end())) {
      matched = true;
    } else if (!res.counterexample) {
      res.counterexample = to_walk(c, q);
    }
    return found < 2 || !matched;
  });
  if (found == 0) return fail(res, "no feasible path between the endpoints");
  if (!matched) return fail(res, "the given path is not a feasible path");
  if (found > 1) return fail(res, "another feasible path exists");

  if (p.strong) {
    const auto strong = check_strongly_order_forced(c, path);
    res.walk_bound = strong.walk_bound;
    if (!strong.strongly_forced) {
      res.counterexample = strong.counterexample;
      return fail(res, "a feasible walk of at most " + std::to_string(strong.walk_bound) + " vertices differs");
    }
  }
  res.pass = true;
  return res;
}

PremiseResult check(const Code& c, const Resolver& r, const OrderForced& p) {
  PremiseResult res{"order_forced", false, {}, {}, {}, {}};
  Walk seq;
  for (const auto& l : p.sequence) seq.push_back(r.word(l));
  if (seq.empty()) return fail(res, "empty sequence");
  if (auto bad = r.missing(seq)) return fail(res, not_a_codeword(c, *bad));
  try {
    if (is_order_forced(c, seq)) {
      res.pass = true;
      return res;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoFeasiblePath) throw;
    return fail(res, "no feasible path between the endpoints");
  }
  std::vector<std::size_t> wanted;
  for (const auto& v : seq) wanted.push_back(c.require_index(v));
  const CodewordGraph g(c);
  for_each_feasible_path(g, wanted.front(), wanted.back(), [&](std::span<const std::size_t> q) {
    std::size_t k = 0;
    for (auto v : q) {
      if (k < wanted.size() && v == wanted[k]) ++k;
    }
    if (k == wanted.size()) return true;
    res.counterexample = to_walk(c, q);
    return false;
  });
  return fail(res, "a feasible path skips the sequence or visits it out of order");
}

PremiseResult check(const Code& c, const Resolver& r, const ForcedBetween& p) {
  PremiseResult res{"forced_between", false, {}, {}, {}, {}};
  const Codeword v = r.word(p.vertex);
  const Codeword from = r.word(p.from);
  const Codeword to = r.word(p.to);
  const std::vector<Codeword> all{v, from, to};
  if (auto bad = r.missing(all)) return fail(res, not_a_codeword(c, *bad));
  std::vector<Codeword> forced;
  try {
    forced = forced_between(c, from, to);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoFeasiblePath) throw;
    return fail(res, "no feasible path between the endpoints");
  }
  if (std::find(forced.begin(), forced.end(), v) != forced.end()) {
    res.pass = true;
    return res;
  }
  const auto target = c.require_index(v);
  const CodewordGraph g(c);
  for_each_feasible_path(g, c.require_index(from), c.require_index(to), [&](std::span<const std::size_t> q) {
    if (std::find(q.begin(), q.end(), target) != q.end()) return true;
    res.counterexample = to_walk(c, q);
    return false;
  });
  return fail(res, "a feasible path avoids " + format_codeword(c.universe(), v));
}

PremiseResult check(const Code& c, const Resolver& r, const DisjointNeurons& p) {
  PremiseResult res{"disjoint_neurons", false, {}, {}, {}, {}};
  const Codeword both = Codeword().with(r.neuron(p.i)).with(r.neuron(p.j));
  for (const auto& w : c.codewords()) {
    if (both.is_subset_of(w)) {
      res.witness = w;
      return fail(res, format_codeword(c.universe(), w) + " contains both neurons");
    }
  }
  res.pass = true;
  return res;
}

PremiseResult check(const Code& c, const Resolver& r, const CodewordPresent& p) {
  PremiseResult res{"codeword_present", false, {}, {}, {}, {}};
  const Codeword w = r.word(p.codeword);
  if (!c.contains(w)) return fail(res, not_a_codeword(c, w));
  res.pass = true;
  return res;
}

PremiseResult check(const Code& c, const Resolver& r, const CodewordAbsent& p) {
  PremiseResult res{"codeword_absent", false, {}, {}, {}, {}};
  const Codeword w = r.word(p.codeword);
  if (c.contains(w)) {
    res.witness = w;
    return fail(res, format_codeword(c.universe(), w) + " is a codeword");
  }
  res.pass = true;
  return res;
}

}  // namespace

std::string_view premise_kind(const Premise& p) {
  return std::visit(overloaded{
                        [](const UniqueFeasiblePath&) { return std::string_view("unique_feasible_path"); },
                        [](const OrderForced&) { return std::string_view("order_forced"); },
                        [](const ForcedBetween&) { return std::string_view("forced_between"); },
                        [](const DisjointNeurons&) { return std::string_view("disjoint_neurons"); },
                        [](const CodewordPresent&) { return std::string_view("codeword_present"); },
                        [](const CodewordAbsent&) { return std::string_view("codeword_absent"); },
                    },
                    p);
}

bool CertificateReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const PremiseResult& r) { return r.pass; });
}

CertificateReport verify_certificate(const Code& c, const Certificate& cert) {
  if (cert.premises.empty()) throw Error(ErrorKind::CertificateMalformed, "a certificate needs at least one premise");
  const Resolver resolver(c);
  CertificateReport report;
  for (const auto& premise : cert.premises) {
    report.results.push_back(std::visit([&](const auto& p) { return check(c, resolver, p); }, premise));
  }
  return report;
}

Code certificate_code(const Certificate& cert) {
  if (cert.inline_code) return *cert.inline_code;
  return registry(cert.code).code;
}

// ---- JSON -------------------------------------------------------------------------------------

namespace {

// Label sets are arrays of labels, or compact strings resolved against the
// certificate's code ("12ab", "{1,10}").
class PremiseReader {
 public:
  explicit PremiseReader(const Certificate& cert) : cert_(cert) {}

  LabelSet labels(const nlohmann::json& v) {
    if (v.is_array()) return v.get<LabelSet>();
    if (!v.is_string()) throw Error(ErrorKind::CertificateMalformed, "a codeword must be a label array or a string");
    if (!code_) code_ = certificate_code(cert_);
    try {
      return labels_of(code_->universe(), parse_codeword(code_->universe(), v.get<std::string>()));
    } catch (const Error& e) {
      throw Error(ErrorKind::CertificateMalformed, e.what());
    }
  }

  std::vector<LabelSet> sequence(const nlohmann::json& v) {
    if (!v.is_array()) throw Error(ErrorKind::CertificateMalformed, "expected a list of codewords");
    std::vector<LabelSet> out;
    for (const auto& w : v) out.push_back(labels(w));
    return out;
  }

  Premise premise(const nlohmann::json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "unique_feasible_path") {
      return UniqueFeasiblePath{labels(j.at("from")), labels(j.at("to")), sequence(j.at("path")),
                                j.value("strong", false)};
    }
    if (kind == "order_forced") return OrderForced{sequence(j.at("sequence"))};
    if (kind == "forced_between") return ForcedBetween{labels(j.at("vertex")), labels(j.at("from")), labels(j.at("to"))};
    if (kind == "disjoint_neurons") return DisjointNeurons{j.at("i").get<std::string>(), j.at("j").get<std::string>()};
    if (kind == "codeword_present") return CodewordPresent{labels(j.at("codeword"))};
    if (kind == "codeword_absent") return CodewordAbsent{labels(j.at("codeword"))};
    throw Error(ErrorKind::CertificateMalformed, "unknown premise kind '" + kind + "'");
  }

 private:
  const Certificate& cert_;
  std::optional<Code> code_;
};

Certificate read_certificate(const nlohmann::json& j) {
  Certificate cert;
  try {
    const auto& code = j.at("code");
    if (code.is_string()) {
      cert.code = code.get<std::string>();
    } else if (code.is_object()) {
      cert.inline_code = parse_code_json(code.dump());
    } else {
      throw Error(ErrorKind::CertificateMalformed, "\"code\" must be a registry name or a code object");
    }
    cert.narrative = j.value("narrative", "");
    PremiseReader reader(cert);
    for (const auto& p : j.at("premises")) cert.premises.push_back(reader.premise(p));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::CertificateMalformed, e.what());
  }
  if (cert.premises.empty()) throw Error(ErrorKind::CertificateMalformed, "a certificate needs at least one premise");
  return cert;
}

nlohmann::ordered_json sequence_json(const std::vector<LabelSet>& s) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& l : s) out.push_back(l);
  return out;
}

nlohmann::ordered_json premise_json(const Premise& p) {
  nlohmann::ordered_json j;
  j["kind"] = premise_kind(p);
  std::visit(overloaded{
                 [&](const UniqueFeasiblePath& u) {
                   j["from"] = u.from;
                   j["to"] = u.to;
                   j["path"] = sequence_json(u.path);
                   if (u.strong) j["strong"] = true;
                 },
                 [&](const OrderForced& o) { j["sequence"] = sequence_json(o.sequence); },
                 [&](const ForcedBetween& f) {
                   j["vertex"] = f.vertex;
                   j["from"] = f.from;
                   j["to"] = f.to;
                 },
                 [&](const DisjointNeurons& d) {
                   j["i"] = d.i;
                   j["j"] = d.j;
                 },
                 [&](const CodewordPresent& w) { j["codeword"] = w.codeword; },
                 [&](const CodewordAbsent& w) { j["codeword"] = w.codeword; },
             },
             p);
  return j;
}

const nlohmann::json& certificates_document() {
  static const nlohmann::json doc = nlohmann::json::parse(data::kCertificatesJson);
  return doc;
}

constexpr int kFirstLn = 1;
constexpr int kLastLn = 5;

LabelSet numbered(std::initializer_list<int> neurons) {
  LabelSet out;
  for (int k : neurons) out.push_back(std::to_string(k));
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) { return std::stoi(a) < std::stoi(b); });
  return out;
}

// x lies in the atom of 4(n+5) or of the word just before it on the spine
// (2456 when n = 1, else 4(n+4)(n+5)); y lies in 4(n+6) or 34(n+6).
Certificate ln_certificate(int n) {
  Certificate cert;
  cert.code = "Ln:" + std::to_string(n);
  cert.narrative = certificates_document().at("families").at("Ln").at("narrative").get<std::string>();
  const LabelSet a = numbered({4, n + 5});
  const LabelSet ab = numbered({4, n + 5, n + 6});
  const LabelSet b = numbered({4, n + 6});
  const LabelSet end = numbered({3, 4, n + 6});
  const LabelSet before = n == 1 ? numbered({2, 4, 5, 6}) : numbered({4, n + 4, n + 5});
  for (const auto& x : {a, before}) {
    std::vector<LabelSet> prefix;
    if (x != a) prefix.push_back(x);
    prefix.push_back(a);
    prefix.push_back(ab);
    prefix.push_back(b);
    cert.premises.push_back(UniqueFeasiblePath{x, b, prefix, false});
    prefix.push_back(end);
    cert.premises.push_back(UniqueFeasiblePath{x, end, prefix, false});
  }
  return cert;
}

}  // namespace

Certificate parse_certificate(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return read_certificate(j);
}

std::string serialize_certificate(const Certificate& cert) {
  nlohmann::ordered_json j;
  if (cert.inline_code) {
    j["code"] = nlohmann::ordered_json::parse(serialize_code_json(*cert.inline_code));
  } else {
    j["code"] = cert.code;
  }
  auto premises = nlohmann::ordered_json::array();
  for (const auto& p : cert.premises) premises.push_back(premise_json(p));
  j["premises"] = std::move(premises);
  j["narrative"] = cert.narrative;
  return j.dump();
}

std::vector<std::string> builtin_certificate_names() {
  std::vector<std::string> names;
  for (const auto& c : certificates_document().at("certificates")) names.push_back(c.at("name").get<std::string>());
  for (int n = kFirstLn; n <= kLastLn; ++n) names.push_back("Ln:" + std::to_string(n));
  return names;
}

Certificate builtin_certificate(std::string_view name) {
  if (name.starts_with("Ln:")) {
    const auto digits = name.substr(3);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) &&
        digits.size() < 4) {
      const int n = std::stoi(std::string(digits));
      if (n >= 1) return ln_certificate(n);
    }
    throw Error(ErrorKind::UnknownCode, "no certificate named '" + std::string(name) + "'");
  }
  for (const auto& c : certificates_document().at("certificates")) {
    if (c.at("name").get<std::string_view>() == name) return read_certificate(c);
  }
  throw Error(ErrorKind::UnknownCode, "no certificate named '" + std::string(name) + "'");
}

}  // namespace nc
