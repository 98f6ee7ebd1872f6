#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nc/core.hpp"

namespace nc {

/// Codewords joined by an edge exactly when one strictly contains the other.
/// Vertices are the canonical indices of the code; neighbor lists are
/// ascending, so every traversal below is deterministic.
class CodewordGraph {
 public:
  explicit CodewordGraph(Code code);

  const Code& code() const noexcept { return code_; }
  std::size_t vertex_count() const noexcept { return code_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const std::size_t> neighbors(std::size_t v) const { return neighbors_[v]; }
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency_[a * code_.size() + b] != 0; }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  Code code_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::uint8_t> adjacency_;
  std::size_t edge_count_ = 0;
};

CodewordGraph codeword_graph(const Code& c);

using Walk = std::vector<Codeword>;

/// 1-based positions i < m < j along the walk with v_i ∩ v_j ⊄ v_m.
struct TripleViolation {
  std::size_t i = 0;
  std::size_t m = 0;
  std::size_t j = 0;

  friend bool operator==(const TripleViolation&, const TripleViolation&) = default;
};

struct FeasibilityReport {
  bool feasible = true;
  std::optional<TripleViolation> violation;  // first in lexicographic (i, m, j) order
};

/// Throws UnknownCodeword for a vertex outside the code and NotAWalk when two
/// consecutive vertices are not adjacent. An empty walk is NotAWalk.
FeasibilityReport is_feasible_walk(const Code& c, std::span<const Codeword> walk);

/// Visits every simple feasible path from `from` to `to` in canonical DFS
/// order. The visitor returns false to stop early. Vertices are canonical
/// indices.
void for_each_feasible_path(const CodewordGraph& g, std::size_t from, std::size_t to,
                            const std::function<bool(std::span<const std::size_t>)>& visit);

/// All simple feasible paths, canonical order. Throws UnknownCodeword.
std::vector<Walk> enumerate_feasible_paths(const Code& c, Codeword from, Codeword to);

/// Vertices common to every feasible path, endpoints included, canonical
/// order. Throws NoFeasiblePath.
std::vector<Codeword> forced_between(const Code& c, Codeword from, Codeword to);

/// True iff every feasible path between the first and last entries contains
/// `seq` as a subsequence. Throws NoFeasiblePath rather than answering
/// vacuously.
bool is_order_forced(const Code& c, std::span<const Codeword> seq);

/// 2·|C|, unless NC_WALK_BOUND is set to a positive integer.
std::size_t default_walk_bound(const Code& c);

struct StrongOrderReport {
  bool strongly_forced = false;
  std::size_t walk_bound = 0;     // maximum number of vertices in searched walks
  std::size_t simple_paths = 0;   // feasible simple paths seen (search stops at 2)
  std::optional<Walk> counterexample;
};

/// Uniqueness of `path` among feasible walks between its endpoints: all
/// simple paths, and every feasible walk with at most `walk_bound` vertices.
/// A counterexample is always a genuine second feasible walk; a positive
/// answer is only as strong as the bound. Throws NotAWalk, UnknownCodeword or
/// InfeasibleWalk when `path` is not itself a feasible walk.
StrongOrderReport check_strongly_order_forced(const Code& c, std::span<const Codeword> path,
                                              std::optional<std::size_t> walk_bound = std::nullopt);

bool is_strongly_order_forced(const Code& c, std::span<const Codeword> path,
                              std::optional<std::size_t> walk_bound = std::nullopt);

/// Repeatedly cuts the segment between the first repeated vertex and its
/// earlier occurrence. Throws InfeasibleWalk.
Walk reduce_walk_to_path(const Code& c, std::span<const Codeword> walk);

}  // namespace nc
