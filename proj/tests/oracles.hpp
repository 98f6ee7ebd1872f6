#pragma once

// Slow, obviously-correct reference implementations and random generators
// shared by the test binaries. Nothing here calls the search code it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nc/algebra.hpp"
#include "nc/core.hpp"
#include "nc/geometry.hpp"

namespace nc::test {

using Rng = std::mt19937_64;
using IndexPath = std::vector<std::size_t>;

inline bool comparable(std::uint64_t a, std::uint64_t b) {
  return a != b && ((a & b) == a || (a & b) == b);
}

inline bool triples_ok(const Code& c, const IndexPath& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t m = i + 1; m < p.size(); ++m)
      for (std::size_t j = m + 1; j < p.size(); ++j) {
        const auto x = c[p[i]].bits() & c[p[j]].bits();
        if ((x & c[p[m]].bits()) != x) return false;
      }
  return true;
}

/// Every simple path from s to t, no pruning, then filtered by the triple
/// condition. Sorted lexicographically by index sequence.
inline std::vector<IndexPath> brute_force_paths(const Code& c, std::size_t s, std::size_t t) {
  std::vector<IndexPath> out;
  IndexPath path{s};
  std::vector<bool> used(c.size());
  used[s] = true;
  std::function<void()> dfs = [&] {
    const auto last = path.back();
    if (last == t) {
      if (triples_ok(c, path)) out.push_back(path);
      return;
    }
    for (std::size_t v = 0; v < c.size(); ++v) {
      if (used[v] || !comparable(c[last].bits(), c[v].bits())) continue;
      used[v] = true;
      path.push_back(v);
      dfs();
      path.pop_back();
      used[v] = false;
    }
  };
  dfs();
  std::sort(out.begin(), out.end());
  return out;
}

/// Same result as brute_force_paths, but a prefix that already fails the
/// triple check is dropped. The triple condition is inherited by prefixes,
/// so nothing is lost; this keeps the oracle usable on codes with 20+ words.
inline std::vector<IndexPath> prefix_pruned_paths(const Code& c, std::size_t s, std::size_t t) {
  std::vector<IndexPath> out;
  IndexPath path{s};
  std::vector<bool> used(c.size());
  used[s] = true;
  std::function<void()> dfs = [&] {
    const auto last = path.back();
    if (last == t) {
      out.push_back(path);
      return;
    }
    for (std::size_t v = 0; v < c.size(); ++v) {
      if (used[v] || !comparable(c[last].bits(), c[v].bits())) continue;
      path.push_back(v);
      if (triples_ok(c, path)) {
        used[v] = true;
        dfs();
        used[v] = false;
      }
      path.pop_back();
    }
  };
  dfs();
  std::sort(out.begin(), out.end());
  return out;
}

/// Every feasible walk from s to t with at most max_len vertices. Walks are
/// grown one vertex at a time and a prefix that fails the triple check is
/// dropped, since no extension can repair it.
inline std::vector<IndexPath> brute_force_walks(const Code& c, std::size_t s, std::size_t t, std::size_t max_len,
                                                std::size_t cap = 100000) {
  std::vector<IndexPath> out;
  IndexPath walk{s};
  std::function<void()> dfs = [&] {
    if (out.size() >= cap) return;
    if (walk.back() == t) out.push_back(walk);
    if (walk.size() >= max_len) return;
    for (std::size_t v = 0; v < c.size(); ++v) {
      if (!comparable(c[walk.back()].bits(), c[v].bits())) continue;
      walk.push_back(v);
      if (triples_ok(c, walk)) dfs();
      walk.pop_back();
    }
  };
  dfs();
  return out;
}

/// Tk(σ) as a membership vector, by direct filtering.
inline std::vector<bool> trunk_of(const Code& c, std::uint64_t sigma) {
  std::vector<bool> t(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) t[k] = (c[k].bits() & sigma) == sigma;
  return t;
}

/// Every trunk of c, from all 2^n subsets of the universe.
inline std::set<std::vector<bool>> all_trunks(const Code& c) {
  std::set<std::vector<bool>> out;
  const std::uint64_t n = c.universe().size();
  for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << n); ++sigma) out.insert(trunk_of(c, sigma));
  out.insert(std::vector<bool>(c.size(), false));
  return out;
}

/// The preimage of every trunk of the target is a trunk of the source.
inline bool brute_force_is_morphism(const CodeMap& f) {
  const auto source_trunks = all_trunks(f.source());
  for (const auto& t : all_trunks(f.target())) {
    std::vector<bool> pre(f.source().size());
    for (std::size_t k = 0; k < pre.size(); ++k) pre[k] = t[f.image()[k]];
    if (!source_trunks.count(pre)) return false;
  }
  return true;
}

/// Neuron j is trivial or redundant to some σ ⊆ universe \ {j}.
inline bool brute_force_removable(const Code& c, std::size_t j) {
  const auto target = trunk_of(c, std::uint64_t{1} << j);
  if (std::none_of(target.begin(), target.end(), [](bool b) { return b; })) return true;
  const std::uint64_t n = c.universe().size();
  const std::uint64_t jbit = std::uint64_t{1} << j;
  for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << n); ++sigma) {
    if ((sigma & jbit) == 0 && trunk_of(c, sigma) == target) return true;
  }
  return false;
}

inline std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// A random code on `neurons` neurons with up to `max_words` codewords.
inline Code random_code(Rng& rng, std::size_t neurons, std::size_t max_words, bool with_empty = true) {
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << neurons) - 1);
  std::uniform_int_distribution<std::size_t> count(1, max_words);
  const std::size_t want = std::min<std::size_t>(count(rng), std::size_t{1} << neurons);
  std::set<std::uint64_t> words;
  if (with_empty) words.insert(0);
  while (words.size() < want) words.insert(bits(rng));
  std::vector<Codeword> cw;
  for (auto w : words) cw.emplace_back(w);
  return Code(NeuronUniverse(numbered_labels(neurons)), std::move(cw));
}

/// A rational p/q with |p/q| <= bound.
inline geom::Rational random_rational(Rng& rng, int bound, int max_den) {
  std::uniform_int_distribution<int> den(1, max_den);
  const int q = den(rng);
  std::uniform_int_distribution<int> num(-bound * q, bound * q);
  return geom::Rational(num(rng), q);
}

}  // namespace nc::test
