#include "quartic/quartic.hpp"

#include <algorithm>
#include <stdexcept>

#include "quartic/errors.hpp"

namespace quartic {

namespace {

constexpr std::size_t kVars = 5;

std::size_t rank_of(const std::vector<ProjPoint>& rows) {
  Matrix m(rows.size(), kVars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < kVars; ++j) m(i, j) = rows[i].at(j);
  return rank(m);
}

void require_point(const ProjPoint& p) {
  if (p.size() != kVars) throw PreconditionError("points need five coordinates");
  if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; }))
    throw PreconditionError("zero vector is not a projective point");
}

void require_line(const ProjLine& l) {
  require_point(l.a);
  require_point(l.b);
  if (rank_of({l.a, l.b}) != 2) throw PreconditionError("line points coincide");
}

/// F restricted to span(basis): a polynomial in basis.size() parameters.
HomogPoly restrict_to(const HomogPoly& f, const std::vector<ProjPoint>& basis) {
  std::vector<std::vector<Rational>> rows(kVars, std::vector<Rational>(basis.size()));
  for (std::size_t k = 0; k < kVars; ++k)
    for (std::size_t j = 0; j < basis.size(); ++j) rows[k][j] = basis[j][k];
  return f.substitute(linear_forms(rows));
}

std::vector<ProjPoint> extend_basis(std::vector<ProjPoint> basis, const std::vector<ProjPoint>& candidates,
                                    std::size_t target) {
  for (const auto& c : candidates) {
    if (basis.size() == target) break;
    auto trial = basis;
    trial.push_back(c);
    if (rank_of(trial) == trial.size()) basis = std::move(trial);
  }
  if (basis.size() != target) throw PreconditionError("could not complete a basis");
  return basis;
}

}  // namespace

ProjPoint normalize_point(ProjPoint p) {
  require_point(p);
  const auto it = std::find_if(p.begin(), p.end(), [](const Rational& x) { return x != 0; });
  const Rational s = 1 / *it;
  for (auto& x : p) x *= s;
  return p;
}

void require_quartic(const HomogPoly& f) {
  if (f.nvars() != kVars) throw PreconditionError("the quartic needs five variables");
  if (f.is_zero() || !f.is_homogeneous() || *f.degree() != 4)
    throw PreconditionError("not a nonzero homogeneous quartic");
}

Matrix hessian(const HomogPoly& f, const ProjPoint& p) {
  Matrix h(kVars, kVars);
  for (std::size_t i = 0; i < kVars; ++i) {
    const HomogPoly di = f.derivative(i);
    for (std::size_t j = 0; j < kVars; ++j) h(i, j) = di.derivative(j).eval(p);
  }
  return h;
}

bool is_singular(const HomogPoly& f, const ProjPoint& p) {
  require_quartic(f);
  require_point(p);
  if (f.eval(p) != 0) throw PreconditionError("point not on X");
  for (std::size_t i = 0; i < kVars; ++i)
    if (f.derivative(i).eval(p) != 0) return false;
  return true;
}

bool is_node(const HomogPoly& f, const ProjPoint& p) {
  if (!is_singular(f, p)) throw PreconditionError("point is not singular");
  const Matrix h = hessian(f, p);
  const auto chart = static_cast<std::size_t>(
      std::find_if(p.begin(), p.end(), [](const Rational& x) { return x != 0; }) - p.begin());
  std::vector<std::size_t> local;
  for (std::size_t i = 0; i < kVars; ++i)
    if (i != chart) local.push_back(i);
  const std::size_t local_rank = rank(h.principal(local));
  if (rank(h) != local_rank) throw std::logic_error("Hessian rank differs between chart and homogeneous form");
  return local_rank == 4;
}

bool line_contained(const HomogPoly& f, const ProjLine& l) {
  require_quartic(f);
  require_line(l);
  return restrict_to(f, {l.a, l.b}).is_zero();
}

long plane_section_line_multiplicity(const HomogPoly& f, const ProjPlane& plane, const ProjLine& l) {
  require_quartic(f);
  require_line(l);
  for (const auto* p : {&plane.a, &plane.b, &plane.c}) require_point(*p);
  const std::vector<ProjPoint> spanning{plane.a, plane.b, plane.c};
  if (rank_of(spanning) != 3) throw PreconditionError("plane points are dependent");
  for (const auto* p : {&l.a, &l.b}) {
    auto trial = spanning;
    trial.push_back(*p);
    if (rank_of(trial) != 3) throw PreconditionError("line not in plane");
  }
  if (!line_contained(f, l)) throw PreconditionError("line not on X");
  const auto basis = extend_basis({l.a, l.b}, spanning, 3);
  const HomogPoly g = restrict_to(f, basis);
  if (g.is_zero()) throw PreconditionError("plane contained in X");
  int k = 4;
  for (const auto& [e, c] : g.terms()) k = std::min(k, e[2]);
  return k;
}

bool tangent_hyperplane_along_line(const HomogPoly& f, const Hyperplane& h, const ProjLine& l) {
  require_quartic(f);
  require_line(l);
  if (h.size() != kVars || std::all_of(h.begin(), h.end(), [](const Rational& x) { return x == 0; }))
    throw PreconditionError("hyperplane needs five coefficients, not all zero");
  auto dot = [&](const ProjPoint& p) {
    Rational s = 0;
    for (std::size_t i = 0; i < kVars; ++i) s += h[i] * p[i];
    return s;
  };
  if (dot(l.a) != 0 || dot(l.b) != 0) throw PreconditionError("hyperplane does not contain the line");
  if (!line_contained(f, l)) throw PreconditionError("line not on X");
  Matrix row(1, kVars);
  for (std::size_t i = 0; i < kVars; ++i) row(0, i) = h[i];
  std::vector<ProjPoint> ker;
  for (auto& v : kernel(row)) ker.push_back(std::move(v));
  const auto basis = extend_basis({l.a, l.b}, ker, 4);
  const HomogPoly g = restrict_to(f, basis);
  for (const auto& [e, c] : g.terms())
    if (e[2] + e[3] < 2) return false;
  return true;
}

EckardtResult eckardt_normal_form(const HomogPoly& f, const ProjPoint& p_in) {
  const ProjPoint p = normalize_point(p_in);
  if (!is_node(f, p)) throw PreconditionError("point is not a node");
  const auto chart = static_cast<std::size_t>(
      std::find_if(p.begin(), p.end(), [](const Rational& x) { return x != 0; }) - p.begin());

  EckardtResult r;
  r.transform = Matrix(kVars, kVars);
  std::size_t col = 0;
  for (std::size_t j = 0; j < kVars; ++j) {
    if (j == chart) continue;
    r.transform(j, col++) = 1;
  }
  for (std::size_t k = 0; k < kVars; ++k) r.transform(k, kVars - 1) = p[k];

  auto rows_of = [](const Matrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
  };
  const HomogPoly g = f.substitute(linear_forms(rows_of(r.transform)));
  auto parts = g.split_by(kVars - 1);
  if (parts.count(4) || parts.count(3)) throw std::logic_error("w^4 or w^3 term at a singular point");
  r.q2 = parts.count(2) ? parts.at(2) : HomogPoly(kVars);
  r.q3 = parts.count(1) ? parts.at(1) : HomogPoly(kVars);
  r.q4 = parts.count(0) ? parts.at(0) : HomogPoly(kVars);

  // q3 = q2 * (l0 x + l1 y + l2 z + l3 t), linear in the l_j.
  std::vector<HomogPoly> products;
  for (std::size_t j = 0; j + 1 < kVars; ++j) products.push_back(r.q2 * HomogPoly::variable(kVars, j));
  std::map<Exponents, std::size_t> monomial_row;
  for (const auto& [e, c] : r.q3.terms()) monomial_row.try_emplace(e, monomial_row.size());
  for (const auto& q : products)
    for (const auto& [e, c] : q.terms()) monomial_row.try_emplace(e, monomial_row.size());
  Matrix system(monomial_row.size(), kVars - 1);
  std::vector<Rational> rhs(monomial_row.size());
  for (std::size_t j = 0; j < products.size(); ++j)
    for (const auto& [e, c] : products[j].terms()) system(monomial_row.at(e), j) = c;
  for (const auto& [e, c] : r.q3.terms()) rhs[monomial_row.at(e)] = c;
  const auto sol = solve(system, rhs);
  if (!sol) return r;

  r.is_eckardt = true;
  r.l = *sol;
  HomogPoly l_form(kVars);
  for (std::size_t j = 0; j + 1 < kVars; ++j) l_form = l_form + HomogPoly::variable(kVars, j) * (*sol)[j];
  r.q4_normal = r.q4 - r.q2 * l_form * l_form * Rational(1, 4);

  Matrix shift = Matrix::identity(kVars);
  for (std::size_t j = 0; j + 1 < kVars; ++j) shift(kVars - 1, j) = -(*sol)[j] / 2;
  r.transform = r.transform * shift;
  const HomogPoly w = HomogPoly::variable(kVars, kVars - 1);
  const HomogPoly normal = w * w * r.q2 + *r.q4_normal;
  if (f.substitute(linear_forms(rows_of(r.transform))) != normal)
    throw std::logic_error("normal form does not re-expand to the equation");
  return r;
}

bool IncidenceReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IncidenceCheck& c) { return c.passed; });
}

std::vector<IncidenceCheck> IncidenceReport::mismatches() const {
  std::vector<IncidenceCheck> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c);
  return out;
}

IncidenceReport verify_incidence(const HomogPoly& f, const QuarticIncidence& config, const Coordinates& coords) {
  require_quartic(f);
  require_valid(config);
  auto lookup = [&](const std::string& id, std::size_t arity) -> const std::vector<ProjPoint>& {
    auto it = coords.find(id);
    if (it == coords.end()) throw ParseError("missing coordinates for " + id);
    if (it->second.size() != arity) throw ParseError("wrong number of points for " + id);
    for (const auto& p : it->second) {
      if (p.size() != kVars) throw ParseError("coordinates of " + id + " need five entries");
      if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; }))
        throw ParseError("coordinates of " + id + " are all zero");
    }
    return it->second;
  };

  IncidenceReport report;
  auto add = [&](const std::string& id, const std::string& check, bool passed, std::string detail = {}) {
    report.checks.push_back({id, check, passed, std::move(detail)});
    return passed;
  };

  std::map<std::string, bool> verified_eckardt;
  for (const auto& sp : config.points()) {
    const ProjPoint p = normalize_point(lookup(sp.id, 1).front());
    if (!add(sp.id, "on X", f.eval(p) == 0)) continue;
    if (!add(sp.id, "singular", is_singular(f, p))) continue;
    if (!add(sp.id, "node", is_node(f, p), "Hessian rank " + std::to_string(rank(hessian(f, p)))))
      continue;
    const bool eck = eckardt_normal_form(f, p).is_eckardt;
    verified_eckardt[sp.id] = eck;
    add(sp.id, "eckardt flag", eck == sp.eckardt,
        std::string("flag ") + (sp.eckardt ? "true" : "false") + ", equation says " + (eck ? "true" : "false"));
  }
  for (const auto& lm : config.lines()) {
    const auto& pts = lookup(lm.id, 2);
    const ProjLine line{pts[0], pts[1]};
    if (rank_of({line.a, line.b}) != 2) {
      add(lm.id, "distinct spanning points", false);
      continue;
    }
    add(lm.id, "contained", line_contained(f, line));
    bool incidence_ok = true;
    for (const auto& sp : config.points()) {
      const ProjPoint& p = lookup(sp.id, 1).front();
      const bool on = rank_of({line.a, line.b, p}) == 2;
      const bool listed = std::find(lm.points.begin(), lm.points.end(), sp.id) != lm.points.end();
      if (on != listed) {
        incidence_ok = false;
        add(lm.id, "incidence", false, sp.id + (listed ? " listed but not on the line" : " on the line but not listed"));
      }
    }
    if (incidence_ok) add(lm.id, "incidence", true);
    for (const auto& q : lm.points) {
      auto it = verified_eckardt.find(q);
      if (it != verified_eckardt.end() && it->second)
        add(lm.id, "eckardt line flag", lm.eckardt, "passes through the eckardt point " + q);
    }
  }
  return report;
}

}  // namespace quartic
