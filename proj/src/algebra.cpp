#include "nc/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nc/kernels.hpp"

namespace nc {

// ---- trunks ------------------------------------------------------------------------

Trunk trunk(const Code& c, Codeword sigma) {
  std::vector<std::uint8_t> flags(c.size());
  kernels::superset_flags(c.bits(), sigma.bits(), flags);
  Trunk t;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (flags[k]) t.members.push_back(c[k]);
  }
  if (!t.members.empty()) t.base = sigma;
  return t;
}

bool is_trunk(const Code& c, std::span<const std::uint8_t> members) {
  std::uint64_t base = ~std::uint64_t{0};
  bool any = false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (members[k]) {
      base &= c.bits()[k];
      any = true;
    }
  }
  if (!any) return true;
  std::vector<std::uint8_t> expected(c.size());
  kernels::superset_flags(c.bits(), base, expected);
  return std::equal(expected.begin(), expected.end(), members.begin(), members.end(),
                    [](std::uint8_t a, std::uint8_t b) { return (a != 0) == (b != 0); });
}

// ---- maps ----------------------------------------------------------------------------

CodeMap::CodeMap(Code source, Code target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_.size()) {
    throw Error(ErrorKind::InvalidParameter, "code map must assign every source codeword exactly once");
  }
  for (auto t : image_) {
    if (t >= target_.size()) throw Error(ErrorKind::UnknownCodeword, "code map image outside the target code");
  }
}

CodeMap CodeMap::from_pairs(Code source, Code target, const std::vector<std::pair<Codeword, Codeword>>& pairs) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(source.size(), unset);
  for (const auto& [from, to] : pairs) {
    const auto s = source.require_index(from);
    if (image[s] != unset) {
      throw Error(ErrorKind::InvalidParameter,
                  "source codeword " + format_codeword(source.universe(), from) + " is assigned twice");
    }
    image[s] = target.require_index(to);
  }
  for (std::size_t s = 0; s < image.size(); ++s) {
    if (image[s] == unset) {
      throw Error(ErrorKind::InvalidParameter,
                  "source codeword " + format_codeword(source.universe(), source[s]) + " has no image");
    }
  }
  return CodeMap(std::move(source), std::move(target), std::move(image));
}

bool is_morphism(const CodeMap& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  std::vector<std::uint8_t> preimage(src.size());
  for (std::size_t j = 0; j < tgt.universe().size(); ++j) {
    for (std::size_t k = 0; k < src.size(); ++k) preimage[k] = tgt[f.image()[k]].contains(j);
    if (!is_trunk(src, preimage)) return false;
  }
  return true;
}

bool is_surjective(const CodeMap& f) {
  std::vector<std::uint8_t> hit(f.target().size());
  for (auto t : f.image()) hit[t] = 1;
  return std::all_of(hit.begin(), hit.end(), [](std::uint8_t h) { return h != 0; });
}

bool is_minor_witness(const CodeMap& f) { return is_surjective(f) && is_morphism(f); }

namespace {

class MinorSearch {
 public:
  MinorSearch(const Code& source, const Code& target)
      : src_(source), tgt_(target), image_(source.size()), hits_(target.size(), 0) {}

  bool run() { return assign(0); }
  const std::vector<std::size_t>& image() const { return image_; }

 private:
  bool assign(std::size_t k) {
    if (k == src_.size()) return is_morphism(CodeMap(src_, tgt_, image_));
    for (std::size_t t = 0; t < tgt_.size(); ++t) {
      image_[k] = t;
      ++hits_[t];
      if (missing_targets() <= src_.size() - k - 1 && trunk_consistent(k + 1) && assign(k + 1)) return true;
      --hits_[t];
    }
    return false;
  }

  std::size_t missing_targets() const {
    return static_cast<std::size_t>(std::count(hits_.begin(), hits_.end(), 0));
  }

  // The final preimage of Tk(j) contains the assigned words A_j, so it also
  // contains every source word above their intersection. Any assigned word in
  // that region whose image lacks j rules the partial map out.
  bool trunk_consistent(std::size_t assigned) const {
    for (std::size_t j = 0; j < tgt_.universe().size(); ++j) {
      std::uint64_t base = ~std::uint64_t{0};
      bool any = false;
      for (std::size_t k = 0; k < assigned; ++k) {
        if (tgt_[image_[k]].contains(j)) {
          base &= src_[k].bits();
          any = true;
        }
      }
      if (!any) continue;
      for (std::size_t k = 0; k < assigned; ++k) {
        if ((src_[k].bits() & base) == base && !tgt_[image_[k]].contains(j)) return false;
      }
    }
    return true;
  }

  const Code& src_;
  const Code& tgt_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> hits_;
};

}  // namespace

std::optional<CodeMap> find_minor_witness(const Code& source, const Code& target) {
  if (source.size() > kMaxMinorSearchSource) {
    throw Error(ErrorKind::InvalidParameter, "exhaustive minor search is limited to " +
                                                 std::to_string(kMaxMinorSearchSource) + " source codewords");
  }
  if (target.size() > source.size() || target.size() == 0) return std::nullopt;
  MinorSearch search(source, target);
  if (!search.run()) return std::nullopt;
  return CodeMap(source, target, search.image());
}

// ---- covered codes ------------------------------------------------------------------------

CoveredCode covered_code(const Code& c, std::string_view neuron) {
  return covered_code(c, c.universe().index_of(neuron));
}

CoveredCode covered_code(const Code& c, std::size_t neuron) {
  const auto& u = c.universe();
  if (neuron >= u.size()) throw Error(ErrorKind::UnknownNeuron, "neuron index " + std::to_string(neuron));

  std::vector<std::size_t> kept;  // old indices of σ
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (k != neuron) kept.push_back(k);
  }
  std::set<std::string> taken(u.labels().begin(), u.labels().end());
  std::vector<std::string> labels;
  for (auto k : kept) labels.push_back(u.label(k));
  for (auto k : kept) {
    std::string barred = u.label(k) + "bar";
    while (taken.count(barred)) barred += "bar";
    taken.insert(barred);
    labels.push_back(std::move(barred));
  }
  NeuronUniverse covered_universe(std::move(labels));

  const std::size_t half = kept.size();
  std::vector<std::uint64_t> images;
  images.reserve(c.size());
  for (const auto& w : c.codewords()) {
    std::uint64_t plain = 0;
    for (std::size_t p = 0; p < half; ++p) {
      if (w.contains(kept[p])) plain |= std::uint64_t{1} << p;
    }
    images.push_back(w.contains(neuron) ? plain | (plain << half) : plain);
  }
  std::set<std::uint64_t> distinct(images.begin(), images.end());
  std::vector<Codeword> words;
  for (auto b : distinct) words.emplace_back(b);
  Code image_code(std::move(covered_universe), std::move(words));

  std::vector<std::size_t> image;
  for (auto b : images) image.push_back(image_code.require_index(Codeword(b)));
  CodeMap map(c, image_code, std::move(image));
  return {std::move(image_code), std::move(map)};
}

// ---- reduction --------------------------------------------------------------------------------

namespace {

std::vector<std::uint8_t> trunk_flags(const Code& c, std::uint64_t sigma) {
  std::vector<std::uint8_t> flags(c.size());
  kernels::superset_flags(c.bits(), sigma, flags);
  return flags;
}

// Visits the k-subsets of `pool` in lexicographic order of their sorted
// index lists; stops when `visit` returns true.
template <typename Visit>
bool for_each_k_subset(const std::vector<std::size_t>& pool, std::size_t k, Visit&& visit) {
  if (k > pool.size()) return false;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    std::uint64_t mask = 0;
    for (auto p : pick) mask |= std::uint64_t{1} << pool[p];
    if (visit(mask)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t r = i; r < k; ++r) pick[r] = pick[r - 1] + 1;
  }
}

std::optional<std::uint64_t> redundancy_witness(const Code& c, std::size_t j) {
  const auto target = trunk_flags(c, std::uint64_t{1} << j);
  std::uint64_t common = ~std::uint64_t{0};
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (target[k]) common &= c.bits()[k];
  }
  common &= ~(std::uint64_t{1} << j);
  // σ must lie inside every word of Tk(j); the largest such σ has the
  // smallest trunk, so if it fails every smaller one does too.
  if (trunk_flags(c, common) != target) return std::nullopt;

  std::vector<std::size_t> pool = Codeword(common).members();
  std::optional<std::uint64_t> found;
  for (std::size_t k = 0; k <= pool.size() && !found; ++k) {
    for_each_k_subset(pool, k, [&](std::uint64_t sigma) {
      if (trunk_flags(c, sigma) == target) found = sigma;
      return found.has_value();
    });
  }
  return found;
}

}  // namespace

Reduction reduce_code(const Code& c, RemovalOrder order) {
  Reduction r{c, {}};
  while (true) {
    const auto& u = r.code.universe();
    const std::size_t n = u.size();
    bool removed = false;
    for (std::size_t step = 0; step < n && !removed; ++step) {
      const std::size_t j = order == RemovalOrder::Canonical ? step : n - 1 - step;
      NeuronRemoval entry{u.label(j), NeuronRemoval::Reason::Trivial, {}};
      const auto tk = trunk_flags(r.code, std::uint64_t{1} << j);
      if (std::find(tk.begin(), tk.end(), std::uint8_t{1}) != tk.end()) {
        const auto witness = redundancy_witness(r.code, j);
        if (!witness) continue;
        entry.reason = NeuronRemoval::Reason::Redundant;
        entry.witness = labels_of(u, Codeword(*witness));
      }
      r.log.push_back(std::move(entry));
      r.code = project(r.code, u.full_mask() & ~(std::uint64_t{1} << j));
      removed = true;
    }
    if (!removed) return r;
  }
}

}  // namespace nc
