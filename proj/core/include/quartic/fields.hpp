#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "quartic/errors.hpp"
#include "quartic/rational.hpp"

namespace quartic {

/// Prime field Z/pZ for an odd prime p < 2^32.
template <std::uint64_t P>
class Fp {
  static_assert(P > 3 && P < (1ULL << 32), "prime must fit the 64-bit product");

 public:
  static constexpr std::uint64_t modulus = P;

  constexpr Fp() = default;
  constexpr Fp(long long x) : v_(reduce(x)) {}  // NOLINT(google-explicit-constructor)

  static Fp from_rational(const Rational& q) {
    const Integer n = q.get_num() % Integer(static_cast<unsigned long>(P));
    const Integer d = q.get_den() % Integer(static_cast<unsigned long>(P));
    if (d == 0) throw PreconditionError("denominator vanishes modulo p");
    return Fp(n.get_si()) / Fp(d.get_si());
  }

  constexpr std::uint64_t value() const noexcept { return v_; }
  constexpr bool is_zero() const noexcept { return v_ == 0; }

  friend constexpr Fp operator+(Fp a, Fp b) { return raw((a.v_ + b.v_) % P); }
  friend constexpr Fp operator-(Fp a, Fp b) { return raw((a.v_ + P - b.v_) % P); }
  friend constexpr Fp operator*(Fp a, Fp b) { return raw((a.v_ * b.v_) % P); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  constexpr Fp operator-() const { return raw((P - v_) % P); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }
  friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend constexpr bool operator<(Fp a, Fp b) { return a.v_ < b.v_; }

  constexpr Fp pow(std::uint64_t e) const {
    Fp base = *this, acc = raw(1);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  Fp inv() const {
    if (v_ == 0) throw PreconditionError("division by zero in prime field");
    return pow(P - 2);
  }

  /// Square root when one exists.
  std::optional<Fp> sqrt() const {
    if (v_ == 0) return *this;
    if (pow((P - 1) / 2).v_ != 1) return std::nullopt;
    if constexpr (P % 4 == 3) {
      return pow((P + 1) / 4);
    } else {
      return tonelli_shanks();
    }
  }

  template <class Rng>
  static Fp random(Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> d(0, P - 1);
    return raw(d(rng));
  }

  std::string str() const { return std::to_string(v_); }

 private:
  static constexpr Fp raw(std::uint64_t x) {
    Fp f;
    f.v_ = x;
    return f;
  }
  static constexpr std::uint64_t reduce(long long x) {
    long long r = x % static_cast<long long>(P);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(P) : r);
  }

  std::optional<Fp> tonelli_shanks() const {
    std::uint64_t q = P - 1, s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    Fp z = raw(2);
    while (z.pow((P - 1) / 2).v_ != P - 1) z = z + raw(1);
    Fp c = z.pow(q), r = pow((q + 1) / 2), t = pow(q);
    std::uint64_t m = s;
    while (t.v_ != 1) {
      std::uint64_t i = 0;
      Fp tt = t;
      while (tt.v_ != 1) {
        tt = tt * tt;
        ++i;
      }
      Fp b = c;
      for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b;
      r = r * b;
      c = b * b;
      t = t * c;
      m = i;
    }
    return r;
  }

  std::uint64_t v_ = 0;
};

inline constexpr std::uint64_t kDefaultPrime = 1000000007ULL;
using DefaultField = Fp<kDefaultPrime>;

/// Uniform interface over the two supported exact fields.
template <class F>
struct FieldOps;

template <std::uint64_t P>
struct FieldOps<Fp<P>> {
  using T = Fp<P>;
  static T from_rational(const Rational& q) { return T::from_rational(q); }
  static bool is_zero(const T& x) { return x.is_zero(); }
  static std::optional<T> sqrt(const T& x) { return x.sqrt(); }
  static std::string str(const T& x) { return x.str(); }
};

template <>
struct FieldOps<Rational> {
  using T = Rational;
  static T from_rational(const Rational& q) { return q; }
  static bool is_zero(const T& x) { return x == 0; }
  static std::optional<T> sqrt(const T& x) {
    if (x < 0) return std::nullopt;
    const Integer& n = x.get_num();
    const Integer& d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
  }
  static std::string str(const T& x) { return to_string(x); }
};

}  // namespace quartic
