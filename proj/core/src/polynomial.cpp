#include "quartic/polynomial.hpp"

#include <numeric>

#include "quartic/errors.hpp"

namespace quartic {

HomogPoly HomogPoly::constant(std::size_t nvars, const Rational& c) {
  HomogPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

HomogPoly HomogPoly::variable(std::size_t nvars, std::size_t i) {
  HomogPoly p(nvars);
  Exponents e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

HomogPoly HomogPoly::linear(const std::vector<Rational>& coefficients) {
  HomogPoly p(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    Exponents e(coefficients.size(), 0);
    e[i] = 1;
    p.add_term(e, coefficients[i]);
  }
  return p;
}

std::optional<int> HomogPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool HomogPoly::is_homogeneous() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    const int s = std::accumulate(e.begin(), e.end(), 0);
    if (d && *d != s) return false;
    d = s;
  }
  return true;
}

void HomogPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw PreconditionError("exponent vector has the wrong length");
  for (int x : e)
    if (x < 0) throw PreconditionError("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational HomogPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
  if (o.nvars_ != nvars_) throw PreconditionError("variable count mismatch");
  HomogPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const { return *this + o * Rational(-1); }

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
  if (o.nvars_ != nvars_) throw PreconditionError("variable count mismatch");
  HomogPoly r(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

HomogPoly HomogPoly::operator*(const Rational& c) const {
  HomogPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

HomogPoly HomogPoly::pow(int e) const {
  HomogPoly r = constant(nvars_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Rational HomogPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw PreconditionError("point has the wrong dimension");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

HomogPoly HomogPoly::derivative(std::size_t var) const {
  HomogPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponents d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

HomogPoly HomogPoly::substitute(const std::vector<HomogPoly>& images) const {
  if (images.size() != nvars_) throw PreconditionError("substitution needs one image per variable");
  const std::size_t m = images.empty() ? 0 : images.front().nvars();
  HomogPoly r(m);
  std::map<std::pair<std::size_t, int>, HomogPoly> powers;
  auto power = [&](std::size_t i, int k) -> const HomogPoly& {
    auto key = std::make_pair(i, k);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, images[i].pow(k)).first;
    return it->second;
  };
  for (const auto& [e, c] : terms_) {
    HomogPoly t = constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t = t * power(i, e[i]);
    r = r + t;
  }
  return r;
}

std::map<int, HomogPoly> HomogPoly::split_by(std::size_t var) const {
  std::map<int, HomogPoly> out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest.at(var) = 0;
    out.try_emplace(e[var], nvars_).first->second.add_term(rest, c);
  }
  return out;
}

std::string HomogPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = abs(c);
    std::string coef = to_string(mag);
    std::string term = mono.empty() ? coef : (mag == 1 ? mono : coef + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

std::vector<HomogPoly> linear_forms(const std::vector<std::vector<Rational>>& rows) {
  std::vector<HomogPoly> out;
  for (const auto& r : rows) out.push_back(HomogPoly::linear(r));
  return out;
}

}  // namespace quartic
