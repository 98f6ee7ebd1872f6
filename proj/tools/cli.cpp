#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "nc/algebra.hpp"
#include "nc/certificates.hpp"
#include "nc/families.hpp"
#include "nc/geometry.hpp"
#include "nc/graph.hpp"

namespace nc::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  Json report;
  int exit_code = 0;
};

using Action = std::function<Outcome()>;

// ---- inputs -----------------------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// A code file, or "registry:NAME".
Code load_code(const std::string& arg) {
  constexpr std::string_view prefix = "registry:";
  if (arg.starts_with(prefix)) return registry(arg.substr(prefix.size())).code;
  return parse_code(read_file(arg));
}

Codeword word(const Code& c, const std::string& text) { return parse_codeword(c.universe(), text); }

Walk words(const Code& c, const std::vector<std::string>& texts) {
  Walk w;
  for (const auto& t : texts) w.push_back(word(c, t));
  return w;
}

Codeword json_word(const NeuronUniverse& u, const nlohmann::json& v) {
  if (v.is_string()) return parse_codeword(u, v.get<std::string>());
  if (v.is_array()) return codeword_from_labels(u, v.get<std::vector<std::string>>());
  throw Error(ErrorKind::Parse, "a codeword must be a string or a label array");
}

/// {"pairs": [["12", "1"], [["1","2"], []], ...]}
CodeMap load_map(const Code& source, const Code& target, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
    std::vector<std::pair<Codeword, Codeword>> pairs;
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::Parse, "each pair must be [source, image]");
      pairs.emplace_back(json_word(source.universe(), p[0]), json_word(target.universe(), p[1]));
    }
    return CodeMap::from_pairs(source, target, pairs);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

// ---- report pieces --------------------------------------------------------------------------------

std::string fmt(const Code& c, Codeword w) { return format_codeword(c.universe(), w); }

Json word_list(const NeuronUniverse& u, std::span<const Codeword> ws) {
  auto out = Json::array();
  for (const auto& w : ws) out.push_back(format_codeword(u, w));
  return out;
}

Json word_list(const Code& c, std::span<const Codeword> ws) { return word_list(c.universe(), ws); }

Json code_json(const Code& c) {
  Json j;
  j["neurons"] = c.universe().labels();
  j["codewords"] = word_list(c, c.codewords());
  j["size"] = c.size();
  return j;
}

Json map_json(const CodeMap& f) {
  auto out = Json::array();
  for (std::size_t k = 0; k < f.source().size(); ++k) {
    out.push_back(Json{{"from", fmt(f.source(), f.source()[k])}, {"to", fmt(f.target(), f.target()[f.image()[k]])}});
  }
  return out;
}

Json walk_bound_json(std::size_t bound, bool from_flag) {
  Json j;
  j["walk_bound"] = bound;
  j["walk_bound_source"] = from_flag ? "flag" : (std::getenv("NC_WALK_BOUND") ? "NC_WALK_BOUND" : "default");
  return j;
}

Json certificate_report_json(const Code& c, const Certificate& cert, const CertificateReport& rep) {
  Json j;
  j["code"] = cert.inline_code ? "inline" : cert.code;
  j["narrative"] = cert.narrative;
  auto premises = Json::array();
  for (std::size_t k = 0; k < rep.results.size(); ++k) {
    const auto& r = rep.results[k];
    Json p;
    p["index"] = k + 1;
    p["kind"] = r.kind;
    p["pass"] = r.pass;
    if (!r.detail.empty()) p["detail"] = r.detail;
    if (r.counterexample) p["counterexample"] = word_list(c, *r.counterexample);
    if (r.witness) p["witness"] = fmt(c, *r.witness);
    if (r.walk_bound) p["walk_bound"] = *r.walk_bound;
    premises.push_back(std::move(p));
  }
  j["premises"] = std::move(premises);
  j["pass"] = rep.all_pass();
  return j;
}

// ---- text rendering --------------------------------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool all_scalars(const Json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const Json& v) { return v.is_primitive(); });
}

void render_text(const Json& j, std::ostream& out, const std::string& indent) {
  for (const auto& [key, v] : j.items()) {
    if (v.is_primitive()) {
      out << indent << key << ": " << scalar_text(v) << '\n';
    } else if (v.is_array() && all_scalars(v)) {
      out << indent << key << ":";
      for (const auto& x : v) out << ' ' << scalar_text(x);
      out << '\n';
    } else if (v.is_array()) {
      out << indent << key << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          bool first = true;
          out << indent << "  -";
          for (const auto& [k2, v2] : x.items()) {
            out << (first ? " " : "  ") << k2 << '=';
            if (v2.is_array()) {
              std::string joined;
              for (const auto& y : v2) joined += (joined.empty() ? "" : ",") + scalar_text(y);
              out << '[' << joined << ']';
            } else if (v2.is_object()) {
              out << v2.dump();
            } else {
              out << scalar_text(v2);
            }
            first = false;
          }
          out << '\n';
        } else if (x.is_array()) {
          out << indent << "  -";
          for (const auto& y : x) out << ' ' << scalar_text(y);
          out << '\n';
        } else {
          out << indent << "  - " << scalar_text(x) << '\n';
        }
      }
    } else {
      out << indent << key << ":\n";
      render_text(v, out, indent + "  ");
    }
  }
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAWalk:
    case ErrorKind::InfeasibleWalk:
    case ErrorKind::NoFeasiblePath:
      return 1;
    default:
      return 2;
  }
}

// ---- the dispatch table -------------------------------------------------------------------------

struct Options {
  bool json = false;
  bool quiet = false;
};

class Dispatcher {
 public:
  Dispatcher() : app_("Combinatorics of convex neural codes", "nc") {
    app_.add_flag("--json", opts_.json, "Machine-readable output");
    app_.add_flag("--quiet", opts_.quiet, "No output; exit code only");
    app_.require_subcommand(1);
    app_.fallthrough();
    build_core();
    build_families();
    build_graph();
    build_algebra();
    build_geometry();
    build_certificates();
    build_report();
  }

  CLI::App& app() { return app_; }
  const Options& options() const { return opts_; }
  const Action& action() const { return action_; }

 private:
  CLI::App* sub(CLI::App& parent, const std::string& name, const std::string& help) {
    auto* s = parent.add_subcommand(name, help);
    s->fallthrough();
    return s;
  }

  // Records the action of whichever subcommand the parser selected.
  void on(CLI::App* s, Action a) {
    s->callback([this, a = std::move(a)] { action_ = a; });
  }

  void build_core() {
    auto* s = sub(app_, "parse", "Parse a code and print it canonically");
    s->add_option("code", a_.code, "Code file or registry:NAME")->required();
    on(s, [this] { return Outcome{code_json(load_code(a_.code))}; });

    s = sub(app_, "max", "Maximal codewords");
    s->add_option("code", a_.code)->required();
    on(s, [this] {
      const Code c = load_code(a_.code);
      const auto m = maximal_codewords(c);
      return Outcome{Json{{"maximal", word_list(c, m)}, {"count", m.size()}}};
    });

    s = sub(app_, "iscomplete", "Is the code intersection complete");
    s->add_option("code", a_.code)->required();
    on(s, [this] {
      const bool yes = is_intersection_complete(load_code(a_.code));
      return Outcome{Json{{"intersection_complete", yes}}, yes ? 0 : 1};
    });

    s = sub(app_, "sunflower", "Is the code a sunflower code");
    s->add_option("code", a_.code)->required();
    on(s, [this] {
      const bool yes = is_sunflower_code(load_code(a_.code));
      return Outcome{Json{{"sunflower", yes}}, yes ? 0 : 1};
    });

    s = sub(app_, "iso", "Find a neuron bijection between two codes");
    s->add_option("a", a_.code)->required();
    s->add_option("b", a_.code2)->required();
    on(s, [this] {
      const auto f = is_isomorphic(load_code(a_.code), load_code(a_.code2));
      Json j{{"isomorphic", f.has_value()}};
      if (f) {
        auto pairs = Json::array();
        for (const auto& [x, y] : f->pairs) pairs.push_back(Json{{"from", x}, {"to", y}});
        j["bijection"] = std::move(pairs);
      }
      return Outcome{j, f ? 0 : 1};
    });
  }

  void build_families() {
    auto* s = sub(app_, "family", "Generate L_n or P_d");
    s->add_option("family", a_.family, "Ln or Pd")->required()->check(CLI::IsMember({"Ln", "Pd"}));
    s->add_option("--n", a_.n, "Parameter of Ln");
    s->add_option("--d", a_.d, "Parameter of Pd");
    s->add_option("--out", a_.out, "Write the code as JSON to this file");
    on(s, [this] {
      const bool ln = a_.family == "Ln";
      const auto& param = ln ? a_.n : a_.d;
      if (!param) throw Error(ErrorKind::InvalidParameter, ln ? "Ln needs --n" : "Pd needs --d");
      const Code c = generate({ln ? Family::Ln : Family::Pd, *param});
      if (a_.out.empty()) return Outcome{code_json(c)};
      std::ofstream f(a_.out, std::ios::binary);
      if (!f) throw Error(ErrorKind::Parse, "cannot write '" + a_.out + "'");
      f << serialize_code_json(c) << '\n';
      return Outcome{Json{{"family", a_.family}, {"parameter", *param}, {"size", c.size()}, {"out", a_.out}}};
    });

    s = sub(app_, "registry", "List named codes or show one");
    s->add_option("name", a_.name);
    on(s, [this] {
      if (a_.name.empty()) return Outcome{Json{{"names", registry_names()}}};
      const auto e = registry(a_.name);
      Json j = code_json(e.code);
      j = Json{{"name", e.name}, {"neurons", j["neurons"]}, {"codewords", j["codewords"]}, {"size", j["size"]}};
      auto facts = Json::array();
      for (const auto& f : e.metadata) facts.push_back(Json{{"fact", f.fact}, {"value", f.value}, {"source", f.source}});
      j["metadata"] = std::move(facts);
      return Outcome{j};
    });
  }

  void build_graph() {
    auto* s = sub(app_, "graph", "Codeword graph");
    s->add_option("code", a_.code)->required();
    on(s, [this] {
      const Code c = load_code(a_.code);
      const CodewordGraph g(c);
      auto adj = Json::array();
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Walk nb;
        for (auto u : g.neighbors(v)) nb.push_back(c[u]);
        adj.push_back(Json{{"vertex", fmt(c, c[v])}, {"neighbors", word_list(c, nb)}});
      }
      return Outcome{Json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"adjacency", adj}}};
    });

    s = sub(app_, "feasible", "Is a walk feasible");
    s->add_option("code", a_.code)->required();
    s->add_option("walk", a_.words, "Codewords of the walk")->required();
    on(s, [this] {
      const Code c = load_code(a_.code);
      const Walk w = words(c, a_.words);
      const auto r = is_feasible_walk(c, w);
      Json j{{"walk", word_list(c, w)}, {"feasible", r.feasible}};
      if (r.violation) {
        const auto& t = *r.violation;
        j["violation"] = Json{{"i", t.i},
                              {"m", t.m},
                              {"j", t.j},
                              {"codewords", Json::array({fmt(c, w[t.i - 1]), fmt(c, w[t.m - 1]), fmt(c, w[t.j - 1])})}};
      }
      return Outcome{j, r.feasible ? 0 : 1};
    });

    s = sub(app_, "paths", "All feasible simple paths between two codewords");
    s->add_option("code", a_.code)->required();
    s->add_option("from", a_.from)->required();
    s->add_option("to", a_.to)->required();
    on(s, [this] {
      const Code c = load_code(a_.code);
      const auto paths = enumerate_feasible_paths(c, word(c, a_.from), word(c, a_.to));
      auto list = Json::array();
      for (const auto& p : paths) list.push_back(word_list(c, p));
      return Outcome{Json{{"from", fmt(c, word(c, a_.from))},
                          {"to", fmt(c, word(c, a_.to))},
                          {"count", paths.size()},
                          {"paths", list}}};
    });

    s = sub(app_, "forced", "Codewords forced between two codewords");
    s->add_option("code", a_.code)->required();
    s->add_option("from", a_.from)->required();
    s->add_option("to", a_.to)->required();
    on(s, [this] {
      const Code c = load_code(a_.code);
      const auto f = forced_between(c, word(c, a_.from), word(c, a_.to));
      return Outcome{Json{{"from", fmt(c, word(c, a_.from))}, {"to", fmt(c, word(c, a_.to))}, {"forced", word_list(c, f)}}};
    });

    s = sub(app_, "order-forced", "Is a sequence order-forced");
    s->add_option("code", a_.code)->required();
    s->add_option("sequence", a_.words)->required();
    on(s, [this] {
      const Code c = load_code(a_.code);
      const Walk seq = words(c, a_.words);
      const bool yes = is_order_forced(c, seq);
      return Outcome{Json{{"sequence", word_list(c, seq)}, {"order_forced", yes}}, yes ? 0 : 1};
    });

    s = sub(app_, "strong", "Is a path strongly order-forced");
    s->add_option("code", a_.code)->required();
    s->add_option("path", a_.words)->required();
    s->add_option("--bound", a_.bound, "Walk bound in vertices (default 2|C| or NC_WALK_BOUND)");
    on(s, [this] {
      const Code c = load_code(a_.code);
      const Walk p = words(c, a_.words);
      const auto r = check_strongly_order_forced(c, p, a_.bound);
      Json j{{"path", word_list(c, p)}, {"strongly_forced", r.strongly_forced}};
      j.update(walk_bound_json(r.walk_bound, a_.bound.has_value()));
      j["simple_paths_seen"] = r.simple_paths;
      if (r.counterexample) j["counterexample"] = word_list(c, *r.counterexample);
      return Outcome{j, r.strongly_forced ? 0 : 1};
    });

    s = sub(app_, "reduce-walk", "Cut a feasible walk down to a simple path");
    s->add_option("code", a_.code)->required();
    s->add_option("walk", a_.words)->required();
    on(s, [this] {
      const Code c = load_code(a_.code);
      const Walk w = words(c, a_.words);
      return Outcome{Json{{"walk", word_list(c, w)}, {"path", word_list(c, reduce_walk_to_path(c, w))}}};
    });
  }

  void build_algebra() {
    auto* s = sub(app_, "trunk", "Codewords containing a set of neurons");
    s->add_option("code", a_.code)->required();
    s->add_option("sigma", a_.from)->required();
    on(s, [this] {
      const Code c = load_code(a_.code);
      const auto t = trunk(c, word(c, a_.from));
      Json j{{"sigma", fmt(c, word(c, a_.from))}, {"members", word_list(c, t.members)}, {"count", t.members.size()}};
      return Outcome{j};
    });

    s = sub(app_, "morphism", "Check a code map");
    s->add_option("source", a_.code)->required();
    s->add_option("target", a_.code2)->required();
    s->add_option("--map", a_.map, "Map file")->required();
    on(s, [this] {
      const CodeMap f = load_map(load_code(a_.code), load_code(a_.code2), a_.map);
      const bool m = is_morphism(f);
      return Outcome{Json{{"morphism", m}, {"surjective", is_surjective(f)}}, m ? 0 : 1};
    });

    s = sub(app_, "minor", "Check a minor witness, or search for one");
    s->add_option("source", a_.code)->required();
    s->add_option("target", a_.code2)->required();
    s->add_option("--map", a_.map, "Check this map instead of searching");
    on(s, [this] {
      const Code src = load_code(a_.code);
      const Code tgt = load_code(a_.code2);
      if (!a_.map.empty()) {
        const CodeMap f = load_map(src, tgt, a_.map);
        const bool yes = is_minor_witness(f);
        return Outcome{Json{{"minor", yes}, {"morphism", is_morphism(f)}, {"surjective", is_surjective(f)}}, yes ? 0 : 1};
      }
      const auto f = find_minor_witness(src, tgt);
      Json j{{"minor", f.has_value()}};
      if (f) j["witness"] = map_json(*f);
      return Outcome{j, f ? 0 : 1};
    });

    s = sub(app_, "covered", "The i-th covered code");
    s->add_option("code", a_.code)->required();
    s->add_option("--i", a_.name, "Neuron label")->required();
    on(s, [this] {
      const auto cc = covered_code(load_code(a_.code), a_.name);
      return Outcome{Json{{"neuron", a_.name}, {"code", code_json(cc.code)}, {"map", map_json(cc.map)}}};
    });

    s = sub(app_, "reduce", "Remove trivial and redundant neurons");
    s->add_option("code", a_.code)->required();
    on(s, [this] {
      const auto r = reduce_code(load_code(a_.code));
      auto log = Json::array();
      for (const auto& e : r.log) {
        log.push_back(Json{{"neuron", e.neuron},
                           {"reason", e.reason == NeuronRemoval::Reason::Trivial ? "trivial" : "redundant"},
                           {"witness", e.witness}});
      }
      return Outcome{Json{{"code", code_json(r.code)}, {"removals", log}}};
    });
  }

  void build_geometry() {
    auto* g = sub(app_, "geom", "Exact half-space realizations");
    g->require_subcommand(1);

    auto* s = sub(*g, "member", "Codeword of a point");
    s->add_option("realization", a_.code)->required();
    s->add_option("--point", a_.from, "Comma-separated rationals")->required()->allow_extra_args(false);
    on(s, [this] {
      const auto r = geom::parse_realization(read_file(a_.code));
      const auto p = geom::parse_point(a_.from);
      return Outcome{Json{{"point", geom::format_point(p)}, {"codeword", format_codeword(r.universe(), geom::membership(r, p))}}};
    });

    s = sub(*g, "witnesses", "Check claimed witness points");
    s->add_option("realization", a_.code)->required();
    s->add_option("claims", a_.code2)->required();
    on(s, [this] {
      const auto r = geom::parse_realization(read_file(a_.code));
      const auto rep = geom::verify_witnesses(r, geom::parse_witness_claims(r, read_file(a_.code2)));
      auto checks = Json::array();
      for (const auto& c : rep.checks) {
        checks.push_back(Json{{"claimed", format_codeword(r.universe(), c.claimed)},
                              {"point", geom::format_point(c.point)},
                              {"actual", c.actual ? Json(format_codeword(r.universe(), *c.actual)) : Json(nullptr)},
                              {"pass", c.pass}});
      }
      return Outcome{Json{{"checks", checks}, {"all_pass", rep.all_pass()}}, rep.all_pass() ? 0 : 1};
    });

    s = sub(*g, "code1d", "Exact code of a realization on the line");
    s->add_option("realization", a_.code)->required();
    on(s, [this] { return Outcome{code_json(geom::code_of_1d_realization(geom::parse_realization(read_file(a_.code))))}; });

    s = sub(*g, "trace", "Membership runs along a segment");
    s->add_option("realization", a_.code)->required();
    s->add_option("--from", a_.from)->required();
    s->add_option("--to", a_.to)->required();
    on(s, [this] {
      const auto r = geom::parse_realization(read_file(a_.code));
      const auto t = geom::segment_atom_trace(r, geom::parse_point(a_.from), geom::parse_point(a_.to));
      auto runs = Json::array();
      for (const auto& run : t.runs) {
        runs.push_back(Json{{"codeword", format_codeword(r.universe(), run.codeword)},
                            {"lo", geom::format_rational(run.lo)},
                            {"hi", geom::format_rational(run.hi)},
                            {"lo_closed", run.lo_closed},
                            {"hi_closed", run.hi_closed}});
      }
      const auto ws = t.codewords();
      return Outcome{Json{{"from", geom::format_point(t.from)},
                          {"to", geom::format_point(t.to)},
                          {"runs", runs},
                          {"codewords", word_list(r.universe(), ws)}}};
    });
  }

  void build_certificates() {
    auto* c = sub(app_, "cert", "Non-convexity certificates");
    c->require_subcommand(1);

    auto* s = sub(*c, "verify", "Verify a certificate against a code");
    s->add_option("files", a_.words, "[code] certificate; the code defaults to the one the certificate names")
        ->expected(1, 2);
    s->add_option("--builtin", a_.name, "Verify a shipped certificate");
    on(s, [this] {
      if (a_.words.empty() == a_.name.empty()) {
        throw Error(ErrorKind::InvalidParameter, "give either certificate files or --builtin NAME");
      }
      const Certificate cert =
          a_.name.empty() ? parse_certificate(read_file(a_.words.back())) : builtin_certificate(a_.name);
      const Code code = a_.words.size() == 2 ? load_code(a_.words.front()) : certificate_code(cert);
      const auto rep = verify_certificate(code, cert);
      return Outcome{certificate_report_json(code, cert, rep), rep.all_pass() ? 0 : 1};
    });

    s = sub(*c, "builtin", "List or print shipped certificates");
    s->add_flag("--list", a_.list, "List names");
    s->add_option("name", a_.name);
    on(s, [this] {
      if (a_.list || a_.name.empty()) return Outcome{Json{{"certificates", builtin_certificate_names()}}};
      return Outcome{Json::parse(serialize_certificate(builtin_certificate(a_.name)))};
    });
  }

  void build_report() {
    auto* s = sub(app_, "report", "Analysis bundle for a named code");
    s->add_option("name", a_.name)->required();
    on(s, [this] {
      const auto e = registry(a_.name);
      const Code& c = e.code;
      const CodewordGraph g(c);
      Json j;
      j["name"] = e.name;
      j["neurons"] = c.universe().labels();
      j["codewords"] = word_list(c, c.codewords());
      j["graph"] = Json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
      j["maximal"] = word_list(c, maximal_codewords(c));
      j["intersection_complete"] = is_intersection_complete(c);
      j["sunflower"] = is_sunflower_code(c);
      auto facts = Json::array();
      for (const auto& f : e.metadata) facts.push_back(Json{{"fact", f.fact}, {"value", f.value}, {"source", f.source}});
      j["metadata"] = std::move(facts);
      j.update(walk_bound_json(default_walk_bound(c), false));
      int code = 0;
      const auto names = builtin_certificate_names();
      const bool has_cert = std::find(names.begin(), names.end(), e.name) != names.end() || e.name.starts_with("Ln:");
      if (has_cert) {
        const auto cert = builtin_certificate(e.name);
        const auto rep = verify_certificate(c, cert);
        j["certificate"] = certificate_report_json(c, cert, rep);
        code = rep.all_pass() ? 0 : 1;
      } else {
        j["certificate"] = nullptr;
      }
      return Outcome{j, code};
    });
  }

  struct Args {
    std::string code, code2, from, to, name, family, out, map;
    std::vector<std::string> words;
    std::optional<int> n, d;
    std::optional<std::size_t> bound;
    bool list = false;
  };

  CLI::App app_;
  Options opts_;
  Args a_;
  Action action_;
};

constexpr Coverage kCoverage[] = {
    {"parse_code", "parse"},
    {"maximal_codewords", "max"},
    {"is_intersection_complete", "iscomplete"},
    {"is_sunflower_code", "sunflower"},
    {"is_isomorphic", "iso"},
    {"gen_Ln", "family"},
    {"gen_Pd", "family"},
    {"registry", "registry"},
    {"codeword_graph", "graph"},
    {"is_feasible_walk", "feasible"},
    {"enumerate_feasible_paths", "paths"},
    {"forced_between", "forced"},
    {"is_order_forced", "order-forced"},
    {"is_strongly_order_forced", "strong"},
    {"reduce_walk_to_path", "reduce-walk"},
    {"trunk", "trunk"},
    {"is_morphism", "morphism"},
    {"is_minor_witness", "minor"},
    {"covered_code", "covered"},
    {"reduce_code", "reduce"},
    {"membership", "geom member"},
    {"verify_witnesses", "geom witnesses"},
    {"code_of_1d_realization", "geom code1d"},
    {"segment_atom_trace", "geom trace"},
    {"verify_certificate", "cert verify"},
    {"builtin_certificates", "cert builtin"},
    {"run", "report"},
};

void collect_paths(const CLI::App& app, const std::string& prefix, std::vector<std::string>& out) {
  for (const auto* s : app.get_subcommands({})) {
    const std::string path = prefix.empty() ? s->get_name() : prefix + " " + s->get_name();
    out.push_back(path);
    collect_paths(*s, path, out);
  }
}

}  // namespace

std::span<const Coverage> operation_coverage() { return kCoverage; }

std::vector<std::string> subcommand_paths() {
  Dispatcher d;
  std::vector<std::string> out;
  collect_paths(d.app(), "", out);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Dispatcher d;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    d.app().parse(reversed);
  } catch (const CLI::ParseError& e) {
    const bool help = e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success);
    d.app().exit(e, out, err);
    return help ? 0 : 2;
  }
  const auto& opts = d.options();
  Outcome result;
  try {
    result = d.action()();
  } catch (const Error& e) {
    if (!opts.quiet) err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  if (!opts.quiet) {
    if (opts.json) {
      out << result.report.dump(2) << '\n';
    } else {
      render_text(result.report, out, "");
    }
  }
  return result.exit_code;
}

}  // namespace nc::cli
