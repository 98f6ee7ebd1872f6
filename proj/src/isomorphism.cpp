#include <algorithm>

#include "nc/core.hpp"

namespace nc {

std::optional<std::string> NeuronBijection::image(std::string_view label) const {
  for (const auto& [from, to] : pairs) {
    if (from == label) return to;
  }
  return std::nullopt;
}

namespace {

// Sorted sizes of the codewords containing each neuron.
std::vector<std::vector<std::size_t>> degree_signatures(const Code& c) {
  std::vector<std::vector<std::size_t>> sig(c.universe().size());
  for (const auto& w : c.codewords()) {
    for (auto i : w.members()) sig[i].push_back(w.size());
  }
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const Code& a, const Code& b) : a_(a), b_(b), image_(a.universe().size(), 0) {
    const auto sig_a = degree_signatures(a);
    const auto sig_b = degree_signatures(b);
    const std::size_t n = a.universe().size();
    candidates_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Same label first so that a code compared with itself yields the identity.
      if (auto same = b.universe().find(a.universe().label(i)); same && sig_b[*same] == sig_a[i]) {
        candidates_[i].push_back(*same);
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (sig_b[j] == sig_a[i] && (candidates_[i].empty() || candidates_[i].front() != j)) {
          candidates_[i].push_back(j);
        }
      }
    }
  }

  bool run() { return extend(0, 0, 0); }
  const std::vector<std::size_t>& image() const { return image_; }

 private:
  bool extend(std::size_t i, std::uint64_t assigned, std::uint64_t used) {
    if (i == image_.size()) return true;
    for (auto j : candidates_[i]) {
      if ((used >> j) & 1U) continue;
      image_[i] = j;
      const std::uint64_t a_mask = assigned | (std::uint64_t{1} << i);
      const std::uint64_t b_mask = used | (std::uint64_t{1} << j);
      if (consistent(a_mask, b_mask) && extend(i + 1, a_mask, b_mask)) return true;
    }
    return false;
  }

  // The multiset of words restricted to the assigned neurons must match.
  bool consistent(std::uint64_t a_mask, std::uint64_t b_mask) {
    lhs_.clear();
    rhs_.clear();
    for (const auto& w : a_.codewords()) {
      std::uint64_t mapped = 0;
      for (auto i : (w & Codeword(a_mask)).members()) mapped |= std::uint64_t{1} << image_[i];
      lhs_.push_back(mapped);
    }
    for (const auto& w : b_.codewords()) rhs_.push_back(w.bits() & b_mask);
    std::sort(lhs_.begin(), lhs_.end());
    std::sort(rhs_.begin(), rhs_.end());
    return lhs_ == rhs_;
  }

  const Code& a_;
  const Code& b_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> image_;
  std::vector<std::uint64_t> lhs_, rhs_;
};

}  // namespace

std::optional<NeuronBijection> is_isomorphic(const Code& a, const Code& b) {
  if (a.universe().size() != b.universe().size() || a.size() != b.size()) return std::nullopt;
  IsoSearch search(a, b);
  if (!search.run()) return std::nullopt;
  NeuronBijection f;
  for (std::size_t i = 0; i < a.universe().size(); ++i) {
    f.pairs.emplace_back(a.universe().label(i), b.universe().label(search.image()[i]));
  }
  return f;
}

Code apply_bijection(const Code& c, const NeuronBijection& f, const NeuronUniverse& target_universe) {
  std::vector<std::size_t> to_target(c.universe().size());
  for (std::size_t i = 0; i < c.universe().size(); ++i) {
    const auto img = f.image(c.universe().label(i));
    if (!img) throw Error(ErrorKind::UnknownNeuron, "bijection does not map '" + c.universe().label(i) + "'");
    to_target[i] = target_universe.index_of(*img);
  }
  std::vector<Codeword> words;
  for (const auto& w : c.codewords()) {
    Codeword mapped;
    for (auto i : w.members()) mapped = mapped.with(to_target[i]);
    words.push_back(mapped);
  }
  return Code(target_universe, std::move(words));
}

}  // namespace nc
