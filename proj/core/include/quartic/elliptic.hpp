#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quartic/errors.hpp"
#include "quartic/fields.hpp"
#include "quartic/incidence.hpp"

namespace quartic {

template <class F>
using CubicPoint = std::array<F, 3>;

template <class F>
using Mat3 = std::array<std::array<F, 3>, 3>;

/// Monomial order of the ten cubic coefficients: x^3 x^2y x^2z xy^2 xyz xz^2 y^3 y^2z yz^2 z^3.
inline constexpr std::array<std::array<int, 3>, 10> kCubicMonomials{{
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}}};

inline constexpr std::size_t cubic_index(int i, int j, int k) {
  for (std::size_t m = 0; m < kCubicMonomials.size(); ++m)
    if (kCubicMonomials[m][0] == i && kCubicMonomials[m][1] == j && kCubicMonomials[m][2] == k) return m;
  return kCubicMonomials.size();
}

template <class F>
CubicPoint<F> normalize(CubicPoint<F> p) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!FieldOps<F>::is_zero(p[i])) {
      const F s = F(1) / p[i];
      for (auto& c : p) c = c * s;
      return p;
    }
  }
  throw PreconditionError("zero vector is not a projective point");
}

template <class F>
CubicPoint<F> cross(const CubicPoint<F>& a, const CubicPoint<F>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class F>
bool proportional(const CubicPoint<F>& a, const CubicPoint<F>& b) {
  const auto c = cross(a, b);
  return FieldOps<F>::is_zero(c[0]) && FieldOps<F>::is_zero(c[1]) && FieldOps<F>::is_zero(c[2]);
}

template <class F>
bool is_null(const CubicPoint<F>& a) {
  return FieldOps<F>::is_zero(a[0]) && FieldOps<F>::is_zero(a[1]) && FieldOps<F>::is_zero(a[2]);
}

template <class F>
F det3(const Mat3<F>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class F>
Mat3<F> inverse3(const Mat3<F>& m) {
  const F d = det3(m);
  if (FieldOps<F>::is_zero(d)) throw PreconditionError("singular 3x3 transform");
  Mat3<F> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int a = (j + 1) % 3, b = (j + 2) % 3, c = (i + 1) % 3, e = (i + 2) % 3;
      r[i][j] = (m[a][c] * m[b][e] - m[a][e] * m[b][c]) / d;
    }
  return r;
}

template <class F>
CubicPoint<F> mul(const Mat3<F>& m, const CubicPoint<F>& p) {
  CubicPoint<F> out{F(0), F(0), F(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] = out[i] + m[i][j] * p[j];
  return out;
}

/// Plane cubic with a designated inflection point as the zero of the chord-tangent law.
template <class F>
class PlaneCubic {
 public:
  using Point = CubicPoint<F>;

  PlaneCubic(std::array<F, 10> coefficients, Point zero)
      : c_(coefficients), zero_(normalize(zero)) {}

  const std::array<F, 10>& coefficients() const noexcept { return c_; }
  const Point& zero() const noexcept { return zero_; }

  F eval(const Point& p) const {
    F acc(0);
    for (std::size_t m = 0; m < 10; ++m) {
      if (FieldOps<F>::is_zero(c_[m])) continue;
      F t = c_[m];
      for (int v = 0; v < 3; ++v)
        for (int e = 0; e < kCubicMonomials[m][v]; ++e) t = t * p[v];
      acc = acc + t;
    }
    return acc;
  }

  Point gradient(const Point& p) const {
    Point g{F(0), F(0), F(0)};
    for (std::size_t m = 0; m < 10; ++m) {
      if (FieldOps<F>::is_zero(c_[m])) continue;
      for (int d = 0; d < 3; ++d) {
        const int ed = kCubicMonomials[m][d];
        if (ed == 0) continue;
        F t = c_[m] * F(ed);
        for (int v = 0; v < 3; ++v) {
          const int e = kCubicMonomials[m][v] - (v == d ? 1 : 0);
          for (int k = 0; k < e; ++k) t = t * p[v];
        }
        g[d] = g[d] + t;
      }
    }
    return g;
  }

  bool contains(const Point& p) const { return FieldOps<F>::is_zero(eval(p)); }

  /// The cubic G(X) = F(A X).
  PlaneCubic transformed(const Mat3<F>& a, const Point& new_zero) const {
    std::array<F, 10> out;
    out.fill(F(0));
    for (std::size_t m = 0; m < 10; ++m) {
      if (FieldOps<F>::is_zero(c_[m])) continue;
      std::vector<int> rows;
      for (int v = 0; v < 3; ++v)
        for (int e = 0; e < kCubicMonomials[m][v]; ++e) rows.push_back(v);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) {
            std::array<int, 3> ex{0, 0, 0};
            ++ex[i];
            ++ex[j];
            ++ex[k];
            out[cubic_index(ex[0], ex[1], ex[2])] += c_[m] * a[rows[0]][i] * a[rows[1]][j] * a[rows[2]][k];
          }
    }
    return PlaneCubic(out, new_zero);
  }

  /// Third point of the curve on the line through a and b (tangent line when a == b).
  Point third_intersection(const Point& a_in, const Point& b_in) const {
    const Point a = normalize(a_in), b = normalize(b_in);
    if (a != b) {
      const F g11 = eval(combine(F(1), a, F(1), b));
      const F g1m = eval(combine(F(1), a, F(-1), b));
      const F half = F(1) / F(2);
      const F c2 = (g11 - g1m) * half;
      const F c1 = (g11 + g1m) * half;
      if (FieldOps<F>::is_zero(c1) && FieldOps<F>::is_zero(c2)) throw PreconditionError("line contained in the cubic");
      return normalize(combine(c1, a, -c2, b));
    }
    const Point g = gradient(a);
    for (int i = 0; i < 3; ++i) {
      Point e{F(0), F(0), F(0)};
      e[i] = F(1);
      const Point d = cross(g, e);
      if (is_null(d) || proportional(d, a)) continue;
      const F c0 = eval(d);
      const F c1 = eval(combine(F(1), a, F(1), d)) - c0;
      if (FieldOps<F>::is_zero(c0) && FieldOps<F>::is_zero(c1)) throw PreconditionError("line contained in the cubic");
      return normalize(combine(c0, a, -c1, d));
    }
    throw PreconditionError("singular point has no tangent line");
  }

  Point neg(const Point& a) const { return third_intersection(a, zero_); }
  Point add(const Point& a, const Point& b) const { return third_intersection(third_intersection(a, b), zero_); }
  Point sub(const Point& a, const Point& b) const { return add(a, neg(b)); }

  Point scalar(long long n, const Point& a) const {
    Point base = n < 0 ? neg(a) : normalize(a);
    unsigned long long k = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    Point acc = zero_;
    while (k) {
      if (k & 1) acc = add(acc, base);
      base = add(base, base);
      k >>= 1;
    }
    return acc;
  }

  /// R_p(x) = 2p - x.
  Point reflection(const Point& p, const Point& x) const { return add(p, add(p, neg(x))); }
  /// Galois involution of the projection from p: x -> -(p + x).
  Point galois(const Point& p, const Point& x) const { return neg(add(p, x)); }

  /// Empty when the curve is a valid elliptic curve with zero as inflection point.
  std::optional<std::string> defect() const {
    if (!contains(zero_)) return "zero not on curve";
    const Point g = gradient(zero_);
    const Point none{F(0), F(0), F(0)};
    if (is_null(g)) return "curve singular at zero";
    std::size_t k = 0;
    while (FieldOps<F>::is_zero(g[k])) ++k;
    Point x_col = none;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j == k) continue;
      Point v = none;
      v[j] = F(1);
      v[k] = -(g[j] / g[k]);
      if (!proportional(v, zero_)) {
        x_col = v;
        break;
      }
    }
    Point z_col = none;
    z_col[k] = F(1);
    Mat3<F> a;
    for (int r = 0; r < 3; ++r) {
      a[r][0] = x_col[r];
      a[r][1] = zero_[r];
      a[r][2] = z_col[r];
    }
    const PlaneCubic w = transformed(a, Point{F(0), F(1), F(0)});
    const auto& q = w.coefficients();
    auto coef = [&](int i, int j, int l) { return q[cubic_index(i, j, l)]; };
    if (!FieldOps<F>::is_zero(coef(0, 3, 0)) || !FieldOps<F>::is_zero(coef(1, 2, 0))) return "internal: bad chart";
    if (!FieldOps<F>::is_zero(coef(2, 1, 0))) return "zero is not an inflection point";
    const F alpha = coef(3, 0, 0), beta = coef(0, 2, 1);
    if (FieldOps<F>::is_zero(alpha) || FieldOps<F>::is_zero(beta)) return "curve is singular";
    const F k3 = -alpha / beta;
    const F a1 = coef(1, 1, 1) / beta;
    const F a3 = k3 * coef(0, 1, 2) / beta;
    const F a2 = -coef(2, 0, 1) / beta;
    const F a4 = k3 * (-coef(1, 0, 2) / beta);
    const F a6 = k3 * k3 * (-coef(0, 0, 3) / beta);
    const F b2 = a1 * a1 + F(4) * a2;
    const F b4 = F(2) * a4 + a1 * a3;
    const F b6 = a3 * a3 + F(4) * a6;
    const F b8 = a1 * a1 * a6 + F(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    const F disc = -b2 * b2 * b8 - F(8) * b4 * b4 * b4 - F(27) * b6 * b6 + F(9) * b2 * b4 * b6;
    if (FieldOps<F>::is_zero(disc)) return "curve is singular";
    return std::nullopt;
  }

 private:
  static Point combine(const F& s, const Point& a, const F& u, const Point& b) {
    return {s * a[0] + u * b[0], s * a[1] + u * b[1], s * a[2] + u * b[2]};
  }

  std::array<F, 10> c_;
  Point zero_;
};

/// Short Weierstrass curve y^2 z = x^3 + a x z^2 + b z^3 carried by an invertible transform,
/// so that the general (non-Weierstrass) code path is exercised.
template <class F>
struct SampledCurve {
  PlaneCubic<F> curve;
  Mat3<F> to_curve;  // Weierstrass point p maps to to_curve * p
  F a;
  F b;
  std::vector<CubicPoint<F>> generators;  // only used over Q
};

template <class F>
PlaneCubic<F> weierstrass(const F& a, const F& b) {
  std::array<F, 10> c;
  c.fill(F(0));
  c[cubic_index(0, 2, 1)] = F(1);
  c[cubic_index(3, 0, 0)] = F(-1);
  c[cubic_index(1, 0, 2)] = -a;
  c[cubic_index(0, 0, 3)] = -b;
  return PlaneCubic<F>(c, {F(0), F(1), F(0)});
}

template <class F, class Rng>
SampledCurve<F> transport(const F& a, const F& b, Rng& rng, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  const PlaneCubic<F> base = weierstrass(a, b);
  while (true) {
    Mat3<F> m;
    for (auto& row : m)
      for (auto& x : row) x = F(d(rng));
    if (FieldOps<F>::is_zero(det3(m))) continue;
    const Mat3<F> inv = inverse3(m);
    PlaneCubic<F> c = base.transformed(inv, mul(m, CubicPoint<F>{F(0), F(1), F(0)}));
    return SampledCurve<F>{c, m, a, b, {}};
  }
}

/// Random nonsingular curve over a prime field.
template <std::uint64_t P, class Rng>
SampledCurve<Fp<P>> sample_curve(Rng& rng) {
  using F = Fp<P>;
  while (true) {
    const F a = F::random(rng), b = F::random(rng);
    if ((F(4) * a * a * a + F(27) * b * b).is_zero()) continue;
    SampledCurve<F> s = transport(a, b, rng, 1000);
    if (s.curve.defect()) continue;
    return s;
  }
}

/// y^2 = x^3 + 17 over Q with two independent points.
template <class Rng>
SampledCurve<Rational> sample_rational_curve(Rng& rng) {
  SampledCurve<Rational> s = transport(Rational(0), Rational(17), rng, 2);
  s.generators = {mul(s.to_curve, CubicPoint<Rational>{-2, 3, 1}), mul(s.to_curve, CubicPoint<Rational>{-1, 4, 1})};
  return s;
}

template <std::uint64_t P, class Rng>
CubicPoint<Fp<P>> random_point(const SampledCurve<Fp<P>>& s, Rng& rng) {
  using F = Fp<P>;
  while (true) {
    const F x = F::random(rng);
    auto y = (x * x * x + s.a * x + s.b).sqrt();
    if (!y) continue;
    return normalize(mul(s.to_curve, CubicPoint<F>{x, *y, F(1)}));
  }
}

template <class Rng>
CubicPoint<Rational> random_point(const SampledCurve<Rational>& s, Rng& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  const auto& c = s.curve;
  return c.add(c.scalar(d(rng), s.generators[0]), c.scalar(d(rng), s.generators[1]));
}

enum class FieldChoice { prime, rational };

struct RelationCheck {
  std::string cluster;
  std::string shape;
  std::string relation;
  std::size_t samples = 0;
  std::size_t failures = 0;
};

struct RelationReport {
  std::string field;
  std::vector<RelationCheck> checks;
  bool ok() const;
};

/// Instantiates each non-eckardt cluster's sections on sampled curves and
/// checks the relations and the reflection model pointwise.
RelationReport verify_relations(const QuarticIncidence& config, std::size_t samples, std::uint64_t seed,
                                FieldChoice field = FieldChoice::prime);

}  // namespace quartic
