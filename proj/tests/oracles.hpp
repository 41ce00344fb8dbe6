#pragma once

// Test-only oracles, independent of the engine's code paths:
//
//  * EuclideanSystem realizes each simple type by explicit vectors in R^n
//    (Bourbaki coordinates), generates all roots as the Weyl orbit of the
//    simple roots by Euclidean reflections, and expands vectors in a basis
//    by solving the Gram system. Coroots are 2 alpha / (alpha, alpha)
//    computed literally.
//  * orbit_positive_roots closes the simple roots under simple reflections
//    in root coordinates, using nothing but the Cartan matrix.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "wonderful/arithmetic.hpp"
#include "wonderful/root_system.hpp"

namespace oracle {

using wonderful::Int;
using wonderful::Rational;
using Vec = std::vector<Rational>;

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s(0);
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline Vec axpy(const Rational& s, const Vec& x, const Vec& y) {  // s x + y
  Vec r = y;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += s * x[k];
  return r;
}

inline Vec scale(const Rational& s, const Vec& x) {
  Vec r = x;
  for (auto& v : r) v *= s;
  return r;
}

/// Coefficients of v in the basis (assumed to span v), via the Gram system.
inline std::vector<Rational> expand(const std::vector<Vec>& basis, const Vec& v) {
  const std::size_t n = basis.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = dot(basis[i], basis[j]);
    m[i][n] = dot(basis[i], v);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == Rational(0)) ++p;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == Rational(0)) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m[i][n] / m[i][i];
  return out;
}

inline std::vector<Int> integral(const std::vector<Rational>& v) {
  std::vector<Int> out;
  for (const auto& x : v) out.push_back(x.to_integer());
  return out;
}

struct EuclideanSystem {
  std::vector<Vec> simple;

  std::size_t rank() const { return simple.size(); }

  Vec reflect(const Vec& v, const Vec& a) const { return axpy(-(Rational(2) * dot(v, a) / dot(a, a)), a, v); }

  Vec coroot(const Vec& a) const { return scale(Rational(2) / dot(a, a), a); }

  /// All roots as Euclidean vectors.
  std::vector<Vec> roots() const {
    std::set<std::vector<std::pair<Int, Int>>> seen;
    auto key = [](const Vec& v) {
      std::vector<std::pair<Int, Int>> k;
      for (const auto& x : v) k.emplace_back(x.num(), x.den());
      return k;
    };
    std::vector<Vec> out = simple, frontier = simple;
    for (const auto& s : simple) seen.insert(key(s));
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& v : frontier)
        for (const auto& a : simple) {
          Vec w = reflect(v, a);
          if (seen.insert(key(w)).second) {
            out.push_back(w);
            next.push_back(w);
          }
        }
      frontier = std::move(next);
    }
    return out;
  }

  /// Positive roots in simple-root coordinates.
  std::vector<std::vector<Int>> positive_roots() const {
    std::vector<std::vector<Int>> out;
    for (const auto& v : roots()) {
      auto c = integral(expand(simple, v));
      if (std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; })) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Vec from_root_coords(const std::vector<Int>& c) const {
    Vec v(simple.front().size(), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) v = axpy(Rational(c[i]), simple[i], v);
    return v;
  }

  /// <alpha_i, alpha_j^> computed from the Euclidean form.
  Int cartan(std::size_t i, std::size_t j) const {
    return (Rational(2) * dot(simple[i], simple[j]) / dot(simple[j], simple[j])).to_integer();
  }

  std::vector<Vec> simple_coroots() const {
    std::vector<Vec> out;
    for (const auto& a : simple) out.push_back(coroot(a));
    return out;
  }

  /// Coroot of the root with these simple-root coordinates, in the
  /// simple-coroot basis.
  std::vector<Int> coroot_coords(const std::vector<Int>& root) const {
    return integral(expand(simple_coroots(), coroot(from_root_coords(root))));
  }

  /// Highest root (maximal height) in simple-root coordinates.
  std::vector<Int> highest_root() const {
    auto pos = positive_roots();
    return *std::max_element(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
      Int ha = 0, hb = 0;
      for (Int x : a) ha += x;
      for (Int x : b) hb += x;
      return ha < hb;
    });
  }

  /// Highest short root, or empty when all roots have one length.
  std::vector<Int> highest_short_root() const {
    auto pos = positive_roots();
    Rational min_len = dot(simple[0], simple[0]), max_len = min_len;
    for (const auto& a : simple) {
      min_len = std::min(min_len, dot(a, a));
      max_len = std::max(max_len, dot(a, a));
    }
    if (min_len == max_len) return {};
    std::vector<Int> best;
    Int best_h = -1;
    for (const auto& c : pos) {
      Vec v = from_root_coords(c);
      if (dot(v, v) != min_len) continue;
      Int h = 0;
      for (Int x : c) h += x;
      if (h > best_h) {
        best_h = h;
        best = c;
      }
    }
    return best;
  }

  /// <x, y^> for Euclidean vectors.
  Rational pair(const Vec& x, const Vec& coroot_vec) const { return dot(x, coroot_vec); }
};

inline Vec unit(std::size_t n, std::size_t k) {
  Vec v(n, Rational(0));
  v[k] = Rational(1);
  return v;
}

inline Vec sub(const Vec& a, const Vec& b) { return axpy(Rational(-1), b, a); }
inline Vec add(const Vec& a, const Vec& b) { return axpy(Rational(1), b, a); }

/// Bourbaki realizations.
inline EuclideanSystem euclidean(const wonderful::SimpleType& t) {
  using wonderful::Family;
  const std::size_t l = static_cast<std::size_t>(t.rank());
  EuclideanSystem s;
  auto e = [](std::size_t n, std::size_t k) { return unit(n, k); };
  switch (t.family()) {
    case Family::A:
      for (std::size_t i = 0; i < l; ++i) s.simple.push_back(sub(e(l + 1, i), e(l + 1, i + 1)));
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < l; ++i) s.simple.push_back(sub(e(l, i), e(l, i + 1)));
      s.simple.push_back(e(l, l - 1));
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < l; ++i) s.simple.push_back(sub(e(l, i), e(l, i + 1)));
      s.simple.push_back(scale(Rational(2), e(l, l - 1)));
      break;
    case Family::D:
      for (std::size_t i = 0; i + 1 < l; ++i) s.simple.push_back(sub(e(l, i), e(l, i + 1)));
      s.simple.push_back(add(e(l, l - 2), e(l, l - 1)));
      break;
    case Family::E: {
      const std::size_t n = 8;
      Vec a1(n, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      s.simple.push_back(a1);
      s.simple.push_back(add(e(n, 0), e(n, 1)));
      for (std::size_t i = 1; i + 2 <= l; ++i) s.simple.push_back(sub(e(n, i), e(n, i - 1)));
      break;
    }
    case Family::F:
      s.simple = {sub(e(4, 1), e(4, 2)), sub(e(4, 2), e(4, 3)), e(4, 3),
                  {Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)}};
      break;
    case Family::G:
      s.simple = {sub(e(3, 0), e(3, 1)), add(add(scale(Rational(-2), e(3, 0)), e(3, 1)), e(3, 2))};
      break;
  }
  return s;
}

/// Positive roots as the W-orbit of the simple roots in root coordinates.
inline std::vector<std::vector<Int>> orbit_positive_roots(const wonderful::RootDatum& d) {
  const std::size_t l = d.rank();
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> frontier;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<Int> v(l, 0);
    v[i] = 1;
    seen.insert(v);
    frontier.push_back(v);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& b : frontier)
      for (std::size_t i = 0; i < l; ++i) {
        Int p = 0;
        for (std::size_t k = 0; k < l; ++k) p += b[k] * d.cartan(k, i);
        std::vector<Int> r = b;
        r[i] -= p;
        if (seen.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<Int>> out;
  for (const auto& v : seen)
    if (std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; })) out.push_back(v);
  return out;
}

/// Types exercised by the exhaustive tests.
inline std::vector<wonderful::SimpleType> all_types() { return wonderful::types_up_to_rank(8); }

}  // namespace oracle
