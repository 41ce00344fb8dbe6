#pragma once

// Weyl group action on weights and cocharacters.
//
// The longest element w0 is obtained by the dominance ascent: reflecting
// -rho at a negative coordinate until it becomes dominant reaches rho, and
// since rho is regular the word of that ascent is a reduced word for w0.
// Exhaustive enumeration of W is provided as an independent oracle only.

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wonderful/root_system.hpp"

namespace wonderful {

inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

/// Word w = s_{word[0]} s_{word[1]} ... (1-based labels) together with its
/// matrix on weight coordinates.
struct WeylElement {
  IntMatrix matrix;
  std::vector<int> word;
};

namespace detail {
inline void check_index(const RootDatum& d, std::size_t i) {
  if (i < 1 || i > d.rank())
    throw IndexOutOfRange("simple reflection index " + std::to_string(i) + " outside 1.." +
                          std::to_string(d.rank()));
}
}  // namespace detail

/// s_i(lambda) = lambda - <lambda, alpha_i^> alpha_i.
inline Weight simple_reflection(const RootDatum& d, std::size_t i, const Weight& lambda) {
  detail::check_index(d, i);
  d.check_rank(lambda.rank());
  const std::size_t k = i - 1;
  Weight out = lambda;
  const Int a = lambda[k];
  for (std::size_t j = 0; j < d.rank(); ++j) out[j] = checked::sub(out[j], checked::mul(a, d.cartan(k, j)));
  return out;
}

/// s_i(eta) = eta - <alpha_i, eta> alpha_i^.
inline Cocharacter simple_reflection(const RootDatum& d, std::size_t i, const Cocharacter& eta) {
  detail::check_index(d, i);
  d.check_rank(eta.rank());
  const std::size_t k = i - 1;
  Cocharacter out = eta;
  const Int c = eta[k];
  for (std::size_t j = 0; j < d.rank(); ++j) out[j] = checked::sub(out[j], checked::mul(c, d.cartan(j, k)));
  return out;
}

/// Applies w = s_{word[0]} ... s_{word[n-1]}; the rightmost letter acts first.
template <class Tag>
Coords<Tag> apply_word(const RootDatum& d, const std::vector<int>& word, Coords<Tag> v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = simple_reflection(d, static_cast<std::size_t>(*it), v);
  return v;
}

/// Dominant element of the W-orbit of `v` and a word w with w(v) equal to it.
template <class Tag>
std::pair<Coords<Tag>, std::vector<int>> dominant_representative(const RootDatum& d, Coords<Tag> v) {
  d.check_rank(v.rank());
  std::vector<int> steps;
  const std::size_t limit = d.positive_roots().size();
  for (;;) {
    std::size_t k = 0;
    while (k < v.rank() && v[k] >= 0) ++k;
    if (k == v.rank()) break;
    if (steps.size() == limit) throw InvariantViolation("dominance ascent exceeded |R+| steps");
    v = simple_reflection(d, k + 1, v);
    steps.push_back(static_cast<int>(k + 1));
  }
  return {std::move(v), std::vector<int>(steps.rbegin(), steps.rend())};
}

/// The longest element of W in every representation the library needs.
struct LongestElement {
  std::vector<int> word;       // reduced word, length |R+|
  IntMatrix on_weights;        // column j = w0(varpi_j)
  IntMatrix on_coweights;      // column j = w0(varpi_j^)
  std::vector<int> opposition; // -w0(alpha_i) = alpha_{opposition[i-1]}
};

inline LongestElement longest_element(const RootDatum& d) {
  const std::size_t l = d.rank();
  auto [top, word] = dominant_representative(d, -d.rho());
  if (top != d.rho()) throw InvariantViolation("dominant representative of -rho is not rho");
  if (word.size() != d.positive_roots().size()) throw InvariantViolation("w0 word length differs from |R+|");

  LongestElement w0;
  w0.word = word;
  w0.on_weights = IntMatrix(l);
  w0.on_coweights = IntMatrix(l);
  for (std::size_t j = 1; j <= l; ++j) {
    Weight col = apply_word(d, word, d.fundamental_weight(j));
    Cocharacter cocol = apply_word(d, word, d.fundamental_coweight(j));
    for (std::size_t i = 0; i < l; ++i) {
      w0.on_weights(i, j - 1) = col[i];
      w0.on_coweights(i, j - 1) = cocol[i];
    }
  }
  // -w0 permutes the fundamental weights exactly as it permutes simple roots.
  w0.opposition.assign(l, 0);
  for (std::size_t j = 0; j < l; ++j) {
    int target = 0;
    for (std::size_t i = 0; i < l; ++i) {
      Int e = -w0.on_weights(i, j);
      if (e == 1 && target == 0) target = static_cast<int>(i + 1);
      else if (e != 0) target = -1;
    }
    if (target <= 0) throw InvariantViolation("-w0 does not permute the fundamental weights");
    w0.opposition[j] = target;
  }
  return w0;
}

inline Weight w0_on_weight(const LongestElement& w0, const Weight& lambda) { return w0.on_weights.apply(lambda); }
inline Weight w0_on_weight(const RootDatum& d, const Weight& lambda) {
  d.check_rank(lambda.rank());
  return w0_on_weight(longest_element(d), lambda);
}

inline Cocharacter w0_on_cocharacter(const LongestElement& w0, const Cocharacter& eta) {
  return w0.on_coweights.apply(eta);
}
inline Cocharacter w0_on_cocharacter(const RootDatum& d, const Cocharacter& eta) {
  d.check_rank(eta.rank());
  return w0_on_cocharacter(longest_element(d), eta);
}

/// Matrix of s_i on weight coordinates.
inline IntMatrix reflection_matrix(const RootDatum& d, std::size_t i) {
  detail::check_index(d, i);
  IntMatrix m = IntMatrix::identity(d.rank());
  for (std::size_t j = 0; j < d.rank(); ++j) m(j, i - 1) = checked::sub(m(j, i - 1), d.cartan(i - 1, j));
  return m;
}

inline IntMatrix word_matrix(const RootDatum& d, const std::vector<int>& word) {
  IntMatrix m = IntMatrix::identity(d.rank());
  for (int i : word) m = m * reflection_matrix(d, static_cast<std::size_t>(i));
  return m;
}

/// Classical order of W; saturates at the largest uint64 value.
inline std::uint64_t weyl_group_order(const SimpleType& t) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto factorial = [&](std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= n; ++k) {
      if (f > kMax / k) return kMax;
      f *= k;
    }
    return f;
  };
  auto times_pow2 = [&](std::uint64_t f, int e) {
    for (int k = 0; k < e; ++k) {
      if (f > kMax / 2) return kMax;
      f *= 2;
    }
    return f;
  };
  const int l = t.rank();
  switch (t.family()) {
    case Family::A: return factorial(static_cast<std::uint64_t>(l) + 1);
    case Family::B:
    case Family::C: return times_pow2(factorial(static_cast<std::uint64_t>(l)), l);
    case Family::D: return times_pow2(factorial(static_cast<std::uint64_t>(l)), l - 1);
    case Family::E: return l == 6 ? 51840ULL : l == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

/// Cap for the enumeration oracle: WONDERFUL_ORACLE_CAP if set and valid,
/// otherwise kDefaultOracleCap.
inline std::size_t oracle_cap_from_env() {
  if (const char* s = std::getenv("WONDERFUL_ORACLE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return static_cast<std::size_t>(v);
  }
  return kDefaultOracleCap;
}

/// The whole Weyl group as matrices on weight coordinates, produced by
/// breadth-first search over left products with simple reflections. Words
/// are recovered from the search tree, so every stored word is reduced.
class WeylGroupEnumeration {
 public:
  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t rank() const noexcept { return rank_; }

  IntMatrix matrix(std::size_t k) const {
    IntMatrix m(rank_);
    const std::size_t n2 = rank_ * rank_;
    for (std::size_t e = 0; e < n2; ++e) m(e / rank_, e % rank_) = entries_[k * n2 + e];
    return m;
  }

  std::vector<int> word(std::size_t k) const {
    std::vector<int> w;
    while (k != 0) {
      w.push_back(generator_[k]);
      k = parent_[k];
    }
    return w;
  }

  WeylElement element(std::size_t k) const { return {matrix(k), word(k)}; }

  /// Indices of the elements sending rho to -rho. For a valid group this is
  /// exactly one element.
  std::vector<std::size_t> rho_negating_indices() const {
    std::vector<std::size_t> out;
    const std::size_t n2 = rank_ * rank_;
    for (std::size_t k = 0; k < size(); ++k) {
      bool ok = true;
      for (std::size_t i = 0; i < rank_ && ok; ++i) {
        Int row = 0;
        for (std::size_t j = 0; j < rank_; ++j) row += entries_[k * n2 + i * rank_ + j];
        ok = row == -1;
      }
      if (ok) out.push_back(k);
    }
    return out;
  }

  /// True iff element k sends every positive root to a negative root.
  bool reverses_positive_roots(const RootDatum& d, std::size_t k) const {
    IntMatrix m = matrix(k);
    for (const Root& a : d.positive_roots()) {
      Root image = d.weight_to_root(m.apply(d.to_weight(a)));
      if (!image.all_nonpositive() || image.is_zero()) return false;
    }
    return true;
  }

  /// The unique element reversing all positive roots.
  WeylElement longest(const RootDatum& d) const {
    auto candidates = rho_negating_indices();
    if (candidates.size() != 1)
      throw InvariantViolation(std::to_string(candidates.size()) + " elements send rho to -rho");
    if (!reverses_positive_roots(d, candidates.front()))
      throw InvariantViolation("rho-negating element does not reverse R+");
    return element(candidates.front());
  }

 private:
  friend WeylGroupEnumeration enumerate_weyl_group(const RootDatum& d, std::size_t cap);

  std::size_t rank_ = 0;
  std::vector<std::int16_t> entries_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> generator_;
};

/// Enumerates W; throws GroupTooLarge when |W| exceeds `cap`.
inline WeylGroupEnumeration enumerate_weyl_group(const RootDatum& d, std::size_t cap = kDefaultOracleCap) {
  const std::uint64_t order = weyl_group_order(d.type());
  if (order > cap)
    throw GroupTooLarge("|W(" + d.type().name() + ")| = " + std::to_string(order) + " exceeds oracle cap " +
                        std::to_string(cap));
  const std::size_t l = d.rank();
  const std::size_t n2 = l * l;

  WeylGroupEnumeration g;
  g.rank_ = l;
  g.entries_.reserve(static_cast<std::size_t>(order) * n2);

  struct Hash {
    const std::vector<std::int16_t>* store;
    std::size_t n2;
    std::size_t operator()(std::uint32_t k) const {
      std::uint64_t h = 1469598103934665603ULL;
      for (std::size_t e = 0; e < n2; ++e) {
        h ^= static_cast<std::uint16_t>((*store)[k * n2 + e]);
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };
  struct Equal {
    const std::vector<std::int16_t>* store;
    std::size_t n2;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      const auto* pa = store->data() + a * n2;
      const auto* pb = store->data() + b * n2;
      return std::equal(pa, pa + n2, pb);
    }
  };
  std::unordered_set<std::uint32_t, Hash, Equal> seen(static_cast<std::size_t>(order) * 2, Hash{&g.entries_, n2},
                                                      Equal{&g.entries_, n2});

  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) g.entries_.push_back(i == j ? 1 : 0);
  g.parent_.push_back(0);
  g.generator_.push_back(0);
  seen.insert(0);

  for (std::size_t k = 0; k < g.size(); ++k) {
    for (std::size_t s = 0; s < l; ++s) {
      const std::size_t base = g.entries_.size();
      g.entries_.resize(base + n2);
      // (s_i M)_{jk} = M_{jk} - cartan(i, j) M_{ik}
      for (std::size_t j = 0; j < l; ++j)
        for (std::size_t c = 0; c < l; ++c) {
          std::int32_t v = g.entries_[k * n2 + j * l + c] -
                           static_cast<std::int32_t>(d.cartan(s, j)) * g.entries_[k * n2 + s * l + c];
          if (v > std::numeric_limits<std::int16_t>::max() || v < std::numeric_limits<std::int16_t>::min())
            throw ArithmeticOverflow("Weyl matrix entry exceeds 16 bits");
          g.entries_[base + j * l + c] = static_cast<std::int16_t>(v);
        }
      const auto idx = static_cast<std::uint32_t>(g.size());
      if (seen.insert(idx).second) {
        if (g.size() + 1 > cap) throw GroupTooLarge("Weyl group enumeration exceeded cap " + std::to_string(cap));
        g.parent_.push_back(static_cast<std::uint32_t>(k));
        g.generator_.push_back(static_cast<std::uint8_t>(s + 1));
      } else {
        g.entries_.resize(base);
      }
    }
  }
  return g;
}

}  // namespace wonderful
