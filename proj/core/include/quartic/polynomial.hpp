#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quartic/rational.hpp"

namespace quartic {

using Exponents = std::vector<int>;

/// Sparse polynomial with exact rational coefficients; zero coefficients are never stored.
class HomogPoly {
 public:
  explicit HomogPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static HomogPoly constant(std::size_t nvars, const Rational& c);
  static HomogPoly variable(std::size_t nvars, std::size_t i);
  static HomogPoly linear(const std::vector<Rational>& coefficients);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree of the leading terms; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;

  HomogPoly operator+(const HomogPoly& o) const;
  HomogPoly operator-(const HomogPoly& o) const;
  HomogPoly operator*(const HomogPoly& o) const;
  HomogPoly operator*(const Rational& c) const;
  HomogPoly pow(int e) const;
  bool operator==(const HomogPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Rational eval(const std::vector<Rational>& point) const;
  HomogPoly derivative(std::size_t var) const;
  /// Replaces variable i by images[i]; all images share one variable count.
  HomogPoly substitute(const std::vector<HomogPoly>& images) const;
  /// Coefficient polynomials of var^k, keyed by k; the variable is kept (with exponent 0).
  std::map<int, HomogPoly> split_by(std::size_t var) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// Linear forms in `nvars` variables for each row of a matrix: row r gives sum_j m(r,j) X_j.
std::vector<HomogPoly> linear_forms(const std::vector<std::vector<Rational>>& rows);

}  // namespace quartic
