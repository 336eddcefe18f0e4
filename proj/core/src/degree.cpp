#include "quartic/degree.hpp"

#include <algorithm>

#include "quartic/errors.hpp"

namespace quartic {

DegreeVector DegreeVector::identity(const QuarticIncidence& config) {
  DegreeVector v;
  v.mu = 1;
  for (const auto& id : config.coordinates()) v.nu[id] = 0;
  return v;
}

Multiplicity DegreeVector::at(const std::string& coordinate) const {
  if (coordinate == kMuCoordinate) return mu;
  auto it = nu.find(coordinate);
  if (it == nu.end()) return std::nullopt;
  return it->second;
}

bool DegreeVector::known(const std::string& coordinate) const {
  return coordinate == kMuCoordinate || nu.count(coordinate) > 0;
}

void DegreeVector::set(const std::string& coordinate, Multiplicity value) {
  if (coordinate == kMuCoordinate) {
    if (!value) throw InsufficientData(coordinate);
    mu = *value;
    return;
  }
  if (value)
    nu[coordinate] = *value;
  else
    nu.erase(coordinate);
}

std::size_t ActionMatrix::index(const std::string& coordinate) const {
  auto it = std::find(basis.begin(), basis.end(), coordinate);
  if (it == basis.end()) throw PreconditionError("coordinate " + coordinate + " not in basis");
  return static_cast<std::size_t>(it - basis.begin());
}

bool ActionMatrix::tracks(const std::string& coordinate) const {
  return std::find(basis.begin(), basis.end(), coordinate) != basis.end();
}

Matrix ActionMatrix::over(const std::vector<std::string>& order) const {
  if (order.size() != basis.size()) throw PreconditionError("basis size mismatch");
  std::vector<std::size_t> idx;
  for (const auto& c : order) idx.push_back(index(c));
  return entries.principal(idx);
}

namespace {

/// Rows keyed by output coordinate; each row maps input coordinate to coefficient.
struct Builder {
  std::vector<std::string> basis;
  std::map<std::string, std::map<std::string, long>> rows;
  std::set<std::string> untouched;

  void coordinate(const std::string& c) {
    if (std::find(basis.begin(), basis.end(), c) == basis.end()) basis.push_back(c);
  }
  void row(const std::string& out, std::map<std::string, long> coeffs) { rows[out] = std::move(coeffs); }

  ActionMatrix finish(const QuarticIncidence& config) {
    ActionMatrix m;
    m.basis = basis;
    m.entries = Matrix(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto it = rows.find(basis[i]);
      if (it == rows.end()) {
        m.entries(i, i) = 1;
        continue;
      }
      for (const auto& [c, x] : it->second) m.entries(i, m.index(c)) = x;
    }
    for (const auto& id : config.coordinates())
      if (!m.tracks(id)) untouched.insert(id);
    m.untouched = std::move(untouched);
    return m;
  }
};

const std::string mu = kMuCoordinate;

bool any_eckardt(const QuarticIncidence& config, const LineMark& l, const std::string& except) {
  for (const auto& p : l.points)
    if (p != except && config.find_point(p)->eckardt) return true;
  return false;
}

ActionMatrix point_matrix(const QuarticIncidence& config, const std::string& P) {
  Builder b;
  b.coordinate(mu);
  b.coordinate(P);
  b.row(mu, {{mu, 3}, {P, -2}});
  b.row(P, {{mu, 4}, {P, -3}});
  for (const LineMark* l : config.lines_through(P)) {
    std::vector<std::string> others;
    for (const auto& q : l->points)
      if (q != P) others.push_back(q);
    const bool applicable = l->points.size() == 3 ? !any_eckardt(config, *l, P) : !l->eckardt;
    if (!applicable) continue;  // left untouched
    for (const auto& q : others) b.coordinate(q);
    b.coordinate(l->id);
    const std::string& L = l->id;
    if (others.empty()) {
      b.row(L, {{mu, 1}, {P, -1}, {L, 1}});
    } else if (others.size() == 1) {
      const std::string& Q = others[0];
      b.row(Q, {{mu, 1}, {P, -1}, {L, 1}});
      b.row(L, {{mu, 1}, {P, -1}, {Q, 1}});
    } else {
      const std::string& Q1 = others[0];
      const std::string& Q2 = others[1];
      b.row(Q1, {{mu, 1}, {P, -1}, {Q2, 1}});
      b.row(Q2, {{mu, 1}, {P, -1}, {Q1, 1}});
      b.row(L, {{mu, 2}, {P, -2}, {L, 1}});
    }
  }
  return b.finish(config);
}

ActionMatrix line_matrix(const QuarticIncidence& config, const LineMark& l) {
  Builder b;
  const std::string& L = l.id;
  b.coordinate(mu);
  for (const auto& p : l.points) b.coordinate(p);
  b.coordinate(L);
  if (l.points.size() == 1) {
    const std::string& P = l.points[0];
    b.row(mu, {{mu, 11}, {L, -10}});
    b.row(P, {{mu, 6}, {P, 1}, {L, -6}});
    b.row(L, {{mu, 12}, {L, -11}});
  } else {
    const std::string& P1 = l.points[0];
    const std::string& P2 = l.points[1];
    b.row(mu, {{mu, 5}, {L, -4}});
    b.row(P1, {{mu, 3}, {L, -3}, {P2, 1}});
    b.row(P2, {{mu, 3}, {L, -3}, {P1, 1}});
    b.row(L, {{mu, 6}, {L, -5}});
  }
  return b.finish(config);
}

ActionMatrix pair_matrix(const QuarticIncidence& config, const PairGen& g) {
  Builder b;
  const std::string &P1 = g.p1, &P2 = g.p2, &L = g.line;
  for (const auto& c : {mu, P1, P2, L}) b.coordinate(c);
  b.row(mu, {{mu, 13}, {P1, -6}, {P2, -6}});
  b.row(P1, {{mu, 14}, {P1, -7}, {P2, -6}});
  b.row(P2, {{mu, 14}, {P1, -6}, {P2, -7}});
  b.row(L, {{mu, 8}, {P1, -4}, {P2, -4}, {L, 1}});
  return b.finish(config);
}

ActionMatrix aut_matrix(const QuarticIncidence& config, const AutGen& a) {
  const Automorphism alpha = resolve_automorphism(config, a);
  Builder b;
  b.coordinate(mu);
  for (const auto& id : config.coordinates()) b.coordinate(id);
  for (const auto& id : config.coordinates()) b.row(id, {{alpha.image(id), 1}});
  return b.finish(config);
}

}  // namespace

ActionMatrix action_matrix(const QuarticIncidence& config, const Generator& g) {
  check_generator(config, g);
  if (const auto* p = std::get_if<PointGen>(&g)) return point_matrix(config, p->point);
  if (const auto* l = std::get_if<LineGen>(&g)) return line_matrix(config, *config.find_line(l->line));
  if (const auto* pp = std::get_if<PairGen>(&g)) return pair_matrix(config, *pp);
  return aut_matrix(config, std::get<AutGen>(g));
}

DegreeVector apply(const ActionMatrix& m, const DegreeVector& v) {
  DegreeVector out = v;
  for (std::size_t i = 0; i < m.basis.size(); ++i) {
    Rational acc = 0;
    std::optional<std::string> missing;
    for (std::size_t j = 0; j < m.basis.size(); ++j) {
      if (m.entries(i, j) == 0) continue;
      auto x = v.at(m.basis[j]);
      if (!x) {
        missing = m.basis[j];
        break;
      }
      acc += m.entries(i, j) * *x;
    }
    if (missing) {
      if (m.basis[i] == kMuCoordinate) throw InsufficientData(*missing);
      out.set(m.basis[i], std::nullopt);
    } else {
      out.set(m.basis[i], acc);
    }
  }
  for (const auto& c : m.untouched) out.set(c, std::nullopt);
  return out;
}

DegreeVector apply(const QuarticIncidence& config, const Generator& g, const DegreeVector& v) {
  return apply(action_matrix(config, g), v);
}

DegreeVector apply_word(const QuarticIncidence& config, const Word& w, const DegreeVector& v) {
  DegreeVector cur = v;
  for (const auto& g : w) cur = apply(config, g, cur);
  return cur;
}

bool fully_known(const QuarticIncidence& config, const Generator& g, const DegreeVector& v) {
  const ActionMatrix m = action_matrix(config, g);
  for (std::size_t i = 0; i < m.basis.size(); ++i)
    for (std::size_t j = 0; j < m.basis.size(); ++j)
      if (m.entries(i, j) != 0 && !v.known(m.basis[j])) return false;
  return true;
}

ActionMatrix compose(const QuarticIncidence& config, const Word& w) {
  std::vector<ActionMatrix> factors;
  std::vector<std::string> basis{mu};
  for (const auto& g : w) {
    factors.push_back(action_matrix(config, g));
    for (const auto& c : factors.back().basis)
      if (std::find(basis.begin(), basis.end(), c) == basis.end()) basis.push_back(c);
  }
  const std::size_t n = basis.size();
  auto pos = [&](const std::string& c) {
    return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), c) - basis.begin());
  };
  Matrix total = Matrix::identity(n);
  std::set<std::string> tainted;
  for (const auto& f : factors) {
    Matrix embedded = Matrix::identity(n);
    std::vector<std::size_t> idx;
    for (const auto& c : f.basis) idx.push_back(pos(c));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      embedded(idx[i], idx[i]) = 0;
      for (std::size_t j = 0; j < idx.size(); ++j) embedded(idx[i], idx[j]) = f.entries(i, j);
    }
    std::set<std::string> next;
    for (const auto& c : tainted)
      if (!f.tracks(c)) next.insert(c);
    for (std::size_t i = 0; i < f.basis.size(); ++i) {
      for (std::size_t j = 0; j < f.basis.size(); ++j) {
        if (f.entries(i, j) != 0 && tainted.count(f.basis[j])) {
          if (f.basis[i] == kMuCoordinate) throw InsufficientData(f.basis[j]);
          next.insert(f.basis[i]);
        }
      }
    }
    next.insert(f.untouched.begin(), f.untouched.end());
    tainted = std::move(next);
    total = embedded * total;
  }
  ActionMatrix out;
  out.basis = basis;
  out.entries = total;
  out.untouched = tainted;
  return out;
}

}  // namespace quartic
