#include "nc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>

#include "nc/kernels.hpp"

namespace nc {

// ---- CodewordGraph --------------------------------------------------------------

CodewordGraph::CodewordGraph(Code code) : code_(std::move(code)) {
  const std::size_t n = code_.size();
  neighbors_.resize(n);
  adjacency_.assign(n * n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::span<std::uint8_t> row(adjacency_.data() + v * n, n);
    kernels::strict_comparable_flags(code_.bits(), code_[v].bits(), row);
    for (std::size_t u = 0; u < n; ++u) {
      if (row[u]) neighbors_[v].push_back(u);
    }
    edge_count_ += neighbors_[v].size();
  }
  edge_count_ /= 2;
}

std::vector<std::pair<std::size_t, std::size_t>> CodewordGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 0; v < neighbors_.size(); ++v) {
    for (auto u : neighbors_[v]) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

CodewordGraph codeword_graph(const Code& c) { return CodewordGraph(c); }

// ---- feasibility of an explicit walk -------------------------------------------------

FeasibilityReport is_feasible_walk(const Code& c, std::span<const Codeword> walk) {
  if (walk.empty()) throw Error(ErrorKind::NotAWalk, "a walk needs at least one vertex");
  for (const auto& v : walk) c.require_index(v);
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
    const Codeword a = walk[k];
    const Codeword b = walk[k + 1];
    if (!(a.is_strict_subset_of(b) || b.is_strict_subset_of(a))) {
      const auto& u = c.universe();
      throw Error(ErrorKind::NotAWalk, format_codeword(u, a) + " and " + format_codeword(u, b) +
                                           " (positions " + std::to_string(k + 1) + ", " +
                                           std::to_string(k + 2) + ") are not adjacent");
    }
  }
  FeasibilityReport report;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    for (std::size_t m = i + 1; m < walk.size(); ++m) {
      for (std::size_t j = m + 1; j < walk.size(); ++j) {
        if (!(walk[i] & walk[j]).is_subset_of(walk[m])) {
          report.feasible = false;
          report.violation = TripleViolation{i + 1, m + 1, j + 1};
          return report;
        }
      }
    }
  }
  return report;
}

// ---- incremental DFS ------------------------------------------------------------------

namespace {

/// Depth-first search over feasible walks (or simple paths) from a fixed
/// start. Extending by w at position L is allowed iff
///   v_i ∩ w ⊆ v_{i+1} ∩ ... ∩ v_{L-1}   for every i ≤ L-2,
/// which covers exactly the triples that end at w. levels_[L][i] caches that
/// running intersection for the current prefix of length L.
/// Every vertex strictly before the end must also contain v_i ∩ target for
/// all earlier i, so candidates failing that are cut immediately.
class FeasibleSearch {
 public:
  using Visitor = std::function<bool(std::span<const std::size_t>)>;

  FeasibleSearch(const CodewordGraph& g, std::size_t target, bool simple, std::size_t max_len)
      : g_(g), bits_(g.code().bits()), target_(target), simple_(simple), max_len_(max_len),
        on_path_(g.vertex_count(), 0) {}

  void run(std::size_t start, const Visitor& visit) {
    visit_ = &visit;
    stopped_ = false;
    path_.clear();
    path_bits_.clear();
    union_.assign(1, 0);
    push(start);
    descend();
    pop();
  }

 private:
  void descend() {
    const std::size_t last = path_.back();
    if (last == target_) {
      if (!(*visit_)(path_)) {
        stopped_ = true;
        return;
      }
      if (simple_) return;
    }
    if (path_.size() >= max_len_) return;
    const std::uint64_t target_bits = bits_[target_];
    for (auto w : g_.neighbors(last)) {
      if (stopped_) return;
      if (simple_ && on_path_[w]) continue;
      const std::uint64_t wb = bits_[w];
      if ((union_.back() & target_bits & ~wb) != 0) continue;
      const std::size_t len = path_.size();
      if (len >= 2) {
        const auto& interior = levels_[len];
        if (kernels::first_triple_violation(std::span(path_bits_).first(len - 1), interior, wb) != kernels::npos) {
          continue;
        }
      }
      push(w);
      descend();
      pop();
    }
  }

  void push(std::size_t w) {
    const std::size_t len = path_.size();  // new vertex lands at position len
    const std::uint64_t wb = bits_[w];
    if (levels_.size() <= len + 1) levels_.resize(len + 2);
    auto& next = levels_[len + 1];
    next.resize(len);
    if (len >= 1) {
      if (len >= 2) kernels::and_broadcast(levels_[len], wb, std::span(next).first(len - 1));
      next[len - 1] = wb;
    }
    path_.push_back(w);
    path_bits_.push_back(wb);
    union_.push_back(union_.back() | wb);
    ++on_path_[w];
  }

  void pop() {
    --on_path_[path_.back()];
    path_.pop_back();
    path_bits_.pop_back();
    union_.pop_back();
  }

  const CodewordGraph& g_;
  std::span<const std::uint64_t> bits_;
  std::size_t target_;
  bool simple_;
  std::size_t max_len_;
  const Visitor* visit_ = nullptr;
  bool stopped_ = false;

  std::vector<std::size_t> path_;
  std::vector<std::uint64_t> path_bits_;
  std::vector<std::uint64_t> union_;  // union_[L] = v_0 | ... | v_{L-1}
  std::vector<std::vector<std::uint64_t>> levels_;
  std::vector<std::uint32_t> on_path_;
};

Walk to_walk(const Code& c, std::span<const std::size_t> vertices) {
  Walk w;
  w.reserve(vertices.size());
  for (auto v : vertices) w.push_back(c[v]);
  return w;
}

}  // namespace

void for_each_feasible_path(const CodewordGraph& g, std::size_t from, std::size_t to,
                            const std::function<bool(std::span<const std::size_t>)>& visit) {
  FeasibleSearch search(g, to, /*simple=*/true, g.vertex_count());
  search.run(from, visit);
}

std::vector<Walk> enumerate_feasible_paths(const Code& c, Codeword from, Codeword to) {
  const auto s = c.require_index(from);
  const auto t = c.require_index(to);
  const CodewordGraph g(c);
  std::vector<Walk> out;
  for_each_feasible_path(g, s, t, [&](std::span<const std::size_t> p) {
    out.push_back(to_walk(c, p));
    return true;
  });
  return out;
}

std::vector<Codeword> forced_between(const Code& c, Codeword from, Codeword to) {
  const auto s = c.require_index(from);
  const auto t = c.require_index(to);
  const CodewordGraph g(c);
  std::vector<std::uint8_t> common(c.size(), 1);
  std::vector<std::uint8_t> seen(c.size());
  bool any = false;
  for_each_feasible_path(g, s, t, [&](std::span<const std::size_t> p) {
    any = true;
    std::fill(seen.begin(), seen.end(), 0);
    for (auto v : p) seen[v] = 1;
    for (std::size_t v = 0; v < c.size(); ++v) common[v] &= seen[v];
    return true;
  });
  if (!any) {
    throw Error(ErrorKind::NoFeasiblePath, "no feasible path from " + format_codeword(c.universe(), from) + " to " +
                                               format_codeword(c.universe(), to));
  }
  std::vector<Codeword> out;
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (common[v]) out.push_back(c[v]);
  }
  return out;
}

bool is_order_forced(const Code& c, std::span<const Codeword> seq) {
  if (seq.empty()) throw Error(ErrorKind::InvalidParameter, "order-forcing needs a nonempty sequence");
  std::vector<std::size_t> wanted;
  for (const auto& v : seq) wanted.push_back(c.require_index(v));
  const CodewordGraph g(c);
  bool any = false;
  bool forced = true;
  for_each_feasible_path(g, wanted.front(), wanted.back(), [&](std::span<const std::size_t> p) {
    any = true;
    std::size_t k = 0;
    for (auto v : p) {
      if (k < wanted.size() && v == wanted[k]) ++k;
    }
    forced = k == wanted.size();
    return forced;
  });
  if (!any) {
    throw Error(ErrorKind::NoFeasiblePath, "no feasible path from " + format_codeword(c.universe(), seq.front()) +
                                               " to " + format_codeword(c.universe(), seq.back()));
  }
  return forced;
}

std::size_t default_walk_bound(const Code& c) {
  if (const char* env = std::getenv("NC_WALK_BOUND")) {
    const std::string_view text(env);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
  }
  return 2 * c.size();
}

StrongOrderReport check_strongly_order_forced(const Code& c, std::span<const Codeword> path,
                                              std::optional<std::size_t> walk_bound) {
  const auto feasibility = is_feasible_walk(c, path);
  if (!feasibility.feasible) {
    const auto& t = *feasibility.violation;
    throw Error(ErrorKind::InfeasibleWalk, "violating triple at positions (" + std::to_string(t.i) + "," +
                                               std::to_string(t.m) + "," + std::to_string(t.j) + ")");
  }
  std::vector<std::size_t> expected;
  for (const auto& v : path) expected.push_back(c.require_index(v));

  StrongOrderReport report;
  report.walk_bound = walk_bound.value_or(default_walk_bound(c));
  const CodewordGraph g(c);
  const auto from = expected.front();
  const auto to = expected.back();

  auto differs = [&](std::span<const std::size_t> p) {
    return !std::equal(p.begin(), p.end(), expected.begin(), expected.end());
  };

  for_each_feasible_path(g, from, to, [&](std::span<const std::size_t> p) {
    ++report.simple_paths;
    if (differs(p) && !report.counterexample) report.counterexample = to_walk(c, p);
    return report.simple_paths < 2;
  });
  // A feasible but non-simple `path` lands here too: its reduction is a
  // simple feasible path that differs from it.
  if (report.counterexample) return report;

  FeasibleSearch walks(g, to, /*simple=*/false, report.walk_bound);
  walks.run(from, [&](std::span<const std::size_t> w) {
    if (differs(w)) {
      report.counterexample = to_walk(c, w);
      return false;
    }
    return true;
  });
  report.strongly_forced = !report.counterexample;
  return report;
}

bool is_strongly_order_forced(const Code& c, std::span<const Codeword> path, std::optional<std::size_t> walk_bound) {
  return check_strongly_order_forced(c, path, walk_bound).strongly_forced;
}

Walk reduce_walk_to_path(const Code& c, std::span<const Codeword> walk) {
  if (!is_feasible_walk(c, walk).feasible) throw Error(ErrorKind::InfeasibleWalk, "cannot reduce an infeasible walk");
  Walk w(walk.begin(), walk.end());
  while (true) {
    bool cut = false;
    for (std::size_t j = 1; j < w.size() && !cut; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (w[i] == w[j]) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          cut = true;
          break;
        }
      }
    }
    if (!cut) return w;
  }
}

}  // namespace nc
