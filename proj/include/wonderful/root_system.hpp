#pragma once

// Exact root data of the simple Lie types with Bourbaki numbering.
//
// Coordinate conventions, fixed for the whole library:
//   Root         simple-root basis              alpha = sum r_i alpha_i
//   Coroot       simple-coroot basis            beta^ = sum m_i alpha_i^
//   Weight       fundamental-weight basis       a_i = <lambda, alpha_i^>
//   Cocharacter  fundamental-coweight basis     c_i = <alpha_i, eta>
//
// Storage is 0-based; indices of simple roots in the public API (words,
// orbit labels, `simple_root(i)` and friends) are 1-based Bourbaki labels.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wonderful/arithmetic.hpp"
#include "wonderful/errors.hpp"

namespace wonderful {

// ---------------------------------------------------------------------------
// Strongly typed coordinate vectors

template <class Tag>
class Coords {
 public:
  Coords() = default;
  explicit Coords(std::vector<Int> values) : v_(std::move(values)) {}
  Coords(std::initializer_list<Int> values) : v_(values) {}

  static Coords zero(std::size_t rank) { return Coords(std::vector<Int>(rank, 0)); }
  /// Basis vector for the 1-based label `i`.
  static Coords unit(std::size_t rank, std::size_t i) {
    if (i < 1 || i > rank) throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    Coords c = zero(rank);
    c.v_[i - 1] = 1;
    return c;
  }

  std::size_t rank() const noexcept { return v_.size(); }
  Int operator[](std::size_t k) const { return v_[k]; }
  Int& operator[](std::size_t k) { return v_[k]; }
  const std::vector<Int>& values() const noexcept { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](Int x) { return x == 0; });
  }
  bool all_nonnegative() const {
    return std::all_of(v_.begin(), v_.end(), [](Int x) { return x >= 0; });
  }
  bool all_positive() const {
    return std::all_of(v_.begin(), v_.end(), [](Int x) { return x >= 1; });
  }
  bool all_nonpositive() const {
    return std::all_of(v_.begin(), v_.end(), [](Int x) { return x <= 0; });
  }
  /// gcd of the coordinates; 0 for the zero vector.
  Int content() const {
    Int g = 0;
    for (Int x : v_) g = std::gcd(g, x);
    return g;
  }
  Int sum() const {
    Int s = 0;
    for (Int x : v_) s = checked::add(s, x);
    return s;
  }
  /// 1-based labels of the non-zero coordinates.
  std::vector<int> support() const {
    std::vector<int> s;
    for (std::size_t k = 0; k < v_.size(); ++k)
      if (v_[k] != 0) s.push_back(static_cast<int>(k + 1));
    return s;
  }

  friend Coords operator+(const Coords& a, const Coords& b) {
    check_same_rank(a, b);
    Coords r = a;
    for (std::size_t k = 0; k < r.v_.size(); ++k) r.v_[k] = checked::add(r.v_[k], b.v_[k]);
    return r;
  }
  friend Coords operator-(const Coords& a, const Coords& b) {
    check_same_rank(a, b);
    Coords r = a;
    for (std::size_t k = 0; k < r.v_.size(); ++k) r.v_[k] = checked::sub(r.v_[k], b.v_[k]);
    return r;
  }
  friend Coords operator-(const Coords& a) {
    Coords r = a;
    for (Int& x : r.v_) x = checked::neg(x);
    return r;
  }
  friend Coords operator*(Int s, const Coords& a) {
    Coords r = a;
    for (Int& x : r.v_) x = checked::mul(s, x);
    return r;
  }

  friend bool operator==(const Coords&, const Coords&) = default;
  friend auto operator<=>(const Coords&, const Coords&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Coords& c) {
    os << '(';
    for (std::size_t k = 0; k < c.v_.size(); ++k) os << (k ? "," : "") << c.v_[k];
    return os << ')';
  }

  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < v_.size(); ++k) s += (k ? "," : "") + std::to_string(v_[k]);
    return s;
  }

 private:
  static void check_same_rank(const Coords& a, const Coords& b) {
    if (a.rank() != b.rank())
      throw RankMismatch("rank " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }

  std::vector<Int> v_;
};

struct RootTag {};
struct CorootTag {};
struct WeightTag {};
struct CocharacterTag {};

using Root = Coords<RootTag>;
using Coroot = Coords<CorootTag>;
using Weight = Coords<WeightTag>;
using Cocharacter = Coords<CocharacterTag>;

inline Int height(const Root& r) { return r.sum(); }
inline bool is_dominant(const Weight& w) { return w.all_nonnegative(); }
inline bool is_regular_dominant(const Weight& w) { return w.all_positive(); }
inline bool is_dominant(const Cocharacter& c) { return c.all_nonnegative(); }
inline bool is_indivisible(const Cocharacter& c) { return c.content() == 1; }

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  std::size_t size() const noexcept { return n_; }
  Int operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::vector<Int>& data() const noexcept { return a_; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.n_ != y.n_) throw RankMismatch("matrix size mismatch");
    IntMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        Int xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r(i, j) = checked::add(r(i, j), checked::mul(xik, y(k, j)));
      }
    return r;
  }
  template <class Tag>
  Coords<Tag> apply(const Coords<Tag>& v) const {
    if (v.rank() != n_) throw RankMismatch("matrix/vector size mismatch");
    std::vector<Int> out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] = checked::add(out[i], checked::mul((*this)(i, j), v[j]));
    return Coords<Tag>(std::move(out));
  }
  IntMatrix transposed() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Int> a_;
};

// ---------------------------------------------------------------------------
// Simple types

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

class SimpleType {
 public:
  /// Validated constructor; throws InadmissibleRank.
  SimpleType(Family family, int rank) : family_(family), rank_(rank) {
    if (!admissible(family, rank))
      throw InadmissibleRank(std::string(1, static_cast<char>(family)) + std::to_string(rank) +
                             " is not an admissible simple type (A>=1, B>=2, C>=2, D>=4, E6-8, F4, G2)");
  }

  static bool admissible(Family f, int rank) {
    switch (f) {
      case Family::A: return rank >= 1;
      case Family::B:
      case Family::C: return rank >= 2;
      case Family::D: return rank >= 4;
      case Family::E: return rank >= 6 && rank <= 8;
      case Family::F: return rank == 4;
      case Family::G: return rank == 2;
    }
    return false;
  }

  /// Parses names like "A2", "e8", "G2".
  static SimpleType parse(std::string_view text) {
    if (text.size() < 2) throw ParseError("bad type '" + std::string(text) + "', expected e.g. A2 or E8");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
      throw ParseError("unknown family '" + std::string(1, text[0]) + "' in '" + std::string(text) + "'");
    int rank = 0;
    for (char ch : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 100000)
        throw ParseError("bad rank in type '" + std::string(text) + "'");
      rank = rank * 10 + (ch - '0');
    }
    return SimpleType(static_cast<Family>(f), rank);
  }

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  char letter() const noexcept { return static_cast<char>(family_); }
  std::string name() const { return std::string(1, letter()) + std::to_string(rank_); }
  bool is_simply_laced() const noexcept {
    return family_ == Family::A || family_ == Family::D || family_ == Family::E;
  }

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
  friend std::ostream& operator<<(std::ostream& os, const SimpleType& t) { return os << t.name(); }

 private:
  Family family_;
  int rank_;
};

/// Every admissible simple type of rank at most `max_rank`, in the order
/// A, B, C, D, E, F, G and by increasing rank.
inline std::vector<SimpleType> types_up_to_rank(int max_rank) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= max_rank; ++r)
      if (SimpleType::admissible(f, r)) out.emplace_back(f, r);
  return out;
}

// ---------------------------------------------------------------------------
// Root datum

class RootDatum;
RootDatum build(const SimpleType& type);

class RootDatum {
 public:
  const SimpleType& type() const noexcept { return type_; }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(type_.rank()); }

  /// cartan(i, j) = <alpha_i, alpha_j^>, 0-based.
  const IntMatrix& cartan() const noexcept { return cartan_; }
  Int cartan(std::size_t i, std::size_t j) const { return cartan_(i, j); }

  /// (alpha_i, alpha_i) for the invariant form normalized so short roots have length 2.
  const std::vector<Int>& simple_norms() const noexcept { return norms_; }

  /// Positive roots ordered by height, then lexicographically.
  const std::vector<Root>& positive_roots() const noexcept { return positive_; }
  const Root& theta() const noexcept { return theta_; }
  const std::optional<Root>& theta_short() const noexcept { return theta_short_; }
  const Weight& rho() const noexcept { return rho_; }
  const Weight& kappa() const noexcept { return kappa_; }
  bool has_two_root_lengths() const noexcept { return theta_short_.has_value(); }

  Root simple_root(std::size_t i) const { return Root::unit(rank(), i); }
  Coroot simple_coroot(std::size_t i) const { return Coroot::unit(rank(), i); }
  Weight fundamental_weight(std::size_t i) const { return Weight::unit(rank(), i); }
  Cocharacter fundamental_coweight(std::size_t i) const { return Cocharacter::unit(rank(), i); }

  bool is_root(const Root& r) const {
    check_rank(r.rank());
    if (r.all_nonnegative()) return std::binary_search(positive_.begin(), positive_.end(), r, root_order);
    if (r.all_nonpositive()) return std::binary_search(positive_.begin(), positive_.end(), -r, root_order);
    return false;
  }

  /// (alpha, alpha) in the normalized invariant form.
  Int norm(const Root& r) const {
    check_rank(r.rank());
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        s = checked::add(s, checked::mul(checked::mul(r[i], r[j]), form(i, j)));
    return s;
  }

  /// alpha^ = 2 alpha / (alpha, alpha) in the simple-coroot basis.
  Coroot coroot(const Root& r) const {
    Int n = norm(r);
    if (n <= 0) throw InvariantViolation("coroot of a non-root");
    std::vector<Int> m(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      Int numer = checked::mul(r[i], norms_[i]);
      if (numer % n != 0) throw InvariantViolation("non-integral coroot coefficient");
      m[i] = numer / n;
    }
    return Coroot(std::move(m));
  }

  Coroot theta_coroot() const { return coroot(theta_); }
  std::optional<Coroot> theta_short_coroot() const {
    if (!theta_short_) return std::nullopt;
    return coroot(*theta_short_);
  }

  /// Weight coordinates of a root: a_i = sum_k r_k cartan(k, i).
  Weight to_weight(const Root& r) const {
    check_rank(r.rank());
    std::vector<Int> a(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t k = 0; k < rank(); ++k) a[i] = checked::add(a[i], checked::mul(r[k], cartan_(k, i)));
    return Weight(std::move(a));
  }

  /// Coweight coordinates of a coroot: c_i = sum_j cartan(i, j) m_j.
  Cocharacter to_cocharacter(const Coroot& m) const {
    check_rank(m.rank());
    std::vector<Int> c(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) c[i] = checked::add(c[i], checked::mul(cartan_(i, j), m[j]));
    return Cocharacter(std::move(c));
  }

  /// Simple-root coordinates of a weight; rational in general.
  std::vector<Rational> root_coordinates(const Weight& w) const {
    check_rank(w.rank());
    std::vector<Rational> r(rank(), Rational(0));
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) r[i] += inv_cartan_t_[i * rank() + j] * Rational(w[j]);
    return r;
  }

  /// The root-lattice element with these weight coordinates; throws
  /// NotIntegral if the weight is not in the root lattice.
  Root weight_to_root(const Weight& w) const {
    auto r = root_coordinates(w);
    std::vector<Int> out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      if (!r[i].is_integer()) throw NotIntegral("weight (" + w.str() + ") is not in the root lattice");
      out[i] = r[i].num();
    }
    return Root(std::move(out));
  }

  /// Simple-coroot coordinates of a cocharacter; rational in general.
  std::vector<Rational> coroot_coordinates(const Cocharacter& c) const {
    check_rank(c.rank());
    // c = cartan * m  =>  m = cartan^{-1} c = (inv(cartan^T))^T c.
    std::vector<Rational> m(rank(), Rational(0));
    for (std::size_t j = 0; j < rank(); ++j)
      for (std::size_t i = 0; i < rank(); ++i) m[j] += inv_cartan_t_[i * rank() + j] * Rational(c[i]);
    return m;
  }

  void check_rank(std::size_t r) const {
    if (r != rank())
      throw RankMismatch("expected " + std::to_string(rank()) + " coordinates for " + type_.name() + ", got " +
                         std::to_string(r));
  }

  static bool root_order(const Root& a, const Root& b) {
    Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a.values() < b.values();
  }

 private:
  friend RootDatum build(const SimpleType& type);
  explicit RootDatum(SimpleType t) : type_(t) {}

  // (alpha_i, alpha_j) = cartan(i, j) * norm_j / 2.
  Int form(std::size_t i, std::size_t j) const { return cartan_(i, j) * norms_[j] / 2; }

  SimpleType type_;
  IntMatrix cartan_;
  std::vector<Int> norms_;
  std::vector<Rational> inv_cartan_t_;  // row-major inverse of cartan^T
  std::vector<Root> positive_;
  Root theta_;
  std::optional<Root> theta_short_;
  Weight rho_;
  Weight kappa_;
};

namespace detail {

// Dynkin diagram as a list of 1-based edges plus the root norms.
struct Diagram {
  std::vector<Int> norms;
  std::vector<std::pair<int, int>> edges;
};

inline Diagram diagram(const SimpleType& t) {
  const int l = t.rank();
  Diagram d;
  d.norms.assign(static_cast<std::size_t>(l), 2);
  auto chain = [&](int upto) {
    for (int i = 1; i < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family()) {
    case Family::A: chain(l); break;
    case Family::B:
      chain(l);
      for (int i = 0; i < l - 1; ++i) d.norms[i] = 4;
      break;
    case Family::C:
      chain(l);
      d.norms[l - 1] = 4;
      break;
    case Family::D:
      chain(l - 1);
      d.edges.emplace_back(l - 2, l);
      break;
    case Family::E:
      d.edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
      for (int i = 5; i < l; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case Family::F:
      chain(4);
      d.norms = {4, 4, 2, 2};
      break;
    case Family::G:
      chain(2);
      d.norms = {2, 6};
      break;
  }
  return d;
}

// Inverse of a small integer matrix over the rationals (Gauss-Jordan).
inline std::vector<Rational> invert(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Rational> a(n * n), inv(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rational(m(i, j));
    inv[i * n + i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == Rational(0)) ++piv;
    if (piv == n) throw InvariantViolation("singular Cartan matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
    Rational p = a[col * n + col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = a[col * n + j] / p;
      inv[col * n + j] = inv[col * n + j] / p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      Rational f = a[i * n + col];
      if (f == Rational(0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] -= f * a[col * n + j];
        inv[i * n + j] -= f * inv[col * n + j];
      }
    }
  }
  return inv;
}

}  // namespace detail

/// Builds the root datum of `type`. Positive roots are generated by
/// closing the simple roots under root strings.
inline RootDatum build(const SimpleType& type) {
  RootDatum d(type);
  const std::size_t l = static_cast<std::size_t>(type.rank());
  detail::Diagram dg = detail::diagram(type);
  d.norms_ = dg.norms;

  d.cartan_ = IntMatrix(l);
  for (std::size_t i = 0; i < l; ++i) d.cartan_(i, i) = 2;
  for (auto [a, b] : dg.edges) {
    std::size_t i = static_cast<std::size_t>(a - 1), j = static_cast<std::size_t>(b - 1);
    Int inner = -std::max(d.norms_[i], d.norms_[j]) / 2;  // (alpha_i, alpha_j)
    d.cartan_(i, j) = 2 * inner / d.norms_[j];
    d.cartan_(j, i) = 2 * inner / d.norms_[i];
  }
  d.inv_cartan_t_ = detail::invert(d.cartan_.transposed());

  // Root strings: for a root beta and simple alpha_i with
  // beta - p alpha_i, ..., beta + q alpha_i the string, p - q = <beta, alpha_i^>.
  std::set<std::vector<Int>> known;
  std::vector<Root> layer;
  for (std::size_t i = 1; i <= l; ++i) {
    layer.push_back(Root::unit(l, i));
    known.insert(layer.back().values());
  }
  std::vector<Root> all = layer;
  while (!layer.empty()) {
    std::set<std::vector<Int>> next_set;
    for (const Root& beta : layer) {
      Weight bw = d.to_weight(beta);
      for (std::size_t i = 0; i < l; ++i) {
        Int p = 0;
        std::vector<Int> down = beta.values();
        while (down[i] > 0) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        Int q = p - bw[i];
        if (q > 0) {
          std::vector<Int> up = beta.values();
          ++up[i];
          if (!known.count(up)) next_set.insert(up);
        }
      }
    }
    layer.clear();
    for (const auto& v : next_set) {
      known.insert(v);
      layer.emplace_back(v);
      all.emplace_back(v);
    }
  }
  std::sort(all.begin(), all.end(), RootDatum::root_order);
  d.positive_ = std::move(all);

  d.theta_ = d.positive_.back();
  if (d.positive_.size() > 1 && height(d.positive_[d.positive_.size() - 2]) == height(d.theta_))
    throw InvariantViolation("highest root is not unique");

  Int min_norm = *std::min_element(d.norms_.begin(), d.norms_.end());
  Int max_norm = *std::max_element(d.norms_.begin(), d.norms_.end());
  if (min_norm != max_norm) {
    for (auto it = d.positive_.rbegin(); it != d.positive_.rend(); ++it)
      if (d.norm(*it) == min_norm) {
        d.theta_short_ = *it;
        break;
      }
  }

  d.rho_ = Weight(std::vector<Int>(l, 1));
  std::vector<Int> kappa(l, 2);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < l; ++k) kappa[i] = checked::add(kappa[i], d.cartan_(k, i));
  d.kappa_ = Weight(std::move(kappa));
  return d;
}

/// Exact <lambda, eta> for a weight and a cocharacter.
inline Rational pairing(const RootDatum& d, const Weight& lambda, const Cocharacter& eta) {
  d.check_rank(lambda.rank());
  d.check_rank(eta.rank());
  auto r = d.root_coordinates(lambda);
  Rational s(0);
  for (std::size_t i = 0; i < d.rank(); ++i) s += r[i] * Rational(eta[i]);
  return s;
}

/// <lambda, beta^> for a coroot-lattice element: sum a_i m_i.
inline Int pairing_with_coroot(const RootDatum& d, const Weight& lambda, const Coroot& cv) {
  d.check_rank(lambda.rank());
  d.check_rank(cv.rank());
  Int s = 0;
  for (std::size_t i = 0; i < d.rank(); ++i) s = checked::add(s, checked::mul(lambda[i], cv[i]));
  return s;
}

inline Weight root_to_weight(const RootDatum& d, const Root& r) { return d.to_weight(r); }

/// <alpha, beta^> for a root-lattice element and a coroot.
inline Int root_coroot_pairing(const RootDatum& d, const Root& alpha, const Coroot& cv) {
  return pairing_with_coroot(d, d.to_weight(alpha), cv);
}

/// Classical count of positive roots.
inline std::size_t classical_positive_root_count(const SimpleType& t) {
  const std::size_t l = static_cast<std::size_t>(t.rank());
  switch (t.family()) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace wonderful
