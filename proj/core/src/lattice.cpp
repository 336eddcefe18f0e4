#include "quartic/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "quartic/errors.hpp"

namespace quartic {

std::size_t CurveConfig::index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return i;
  throw InvalidInput("unknown vertex " + id);
}

bool CurveConfig::simply_laced() const {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& v : vertices)
    if (v.self != -2) return false;
  for (const auto& e : edges) {
    if (e.multiplicity != 1) return false;
    if (!seen.insert(std::minmax(e.a, e.b)).second) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> CurveConfig::components() const {
  const std::size_t n = vertices.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    const std::size_t a = find(index(e.a)), b = find(index(e.b));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

CurveConfig CurveConfig::induced(const std::vector<std::size_t>& idx) const {
  CurveConfig out;
  std::set<std::string> keep;
  for (auto i : idx) {
    out.vertices.push_back(vertices[i]);
    keep.insert(vertices[i].id);
  }
  for (const auto& e : edges)
    if (keep.count(e.a) && keep.count(e.b)) out.edges.push_back(e);
  return out;
}

void check_curve_config(const CurveConfig& g) {
  std::set<std::string> ids;
  for (const auto& v : g.vertices) {
    if (v.id.empty()) throw InvalidInput("empty vertex id");
    if (!ids.insert(v.id).second) throw InvalidInput("duplicate vertex " + v.id);
  }
  for (const auto& e : g.edges) {
    if (!ids.count(e.a) || !ids.count(e.b)) throw InvalidInput("edge to unknown vertex " + e.a + "-" + e.b);
    if (e.a == e.b) throw InvalidInput("self-edge at " + e.a);
    if (e.multiplicity < 1) throw InvalidInput("edge multiplicity below 1 at " + e.a + "-" + e.b);
  }
}

Matrix intersection_matrix(const CurveConfig& g) {
  check_curve_config(g);
  Matrix m(g.vertices.size(), g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) m(i, i) = g.vertices[i].self;
  for (const auto& e : g.edges) {
    const std::size_t a = g.index(e.a), b = g.index(e.b);
    m(a, b) += e.multiplicity;
    m(b, a) += e.multiplicity;
  }
  return m;
}

std::string to_string(DefinitenessKind k) {
  switch (k) {
    case DefinitenessKind::negative_definite: return "negative_definite";
    case DefinitenessKind::negative_semidefinite: return "negative_semidefinite";
    case DefinitenessKind::indefinite_or_other: return "indefinite_or_other";
  }
  return "indefinite_or_other";
}

DefinitenessReport definiteness(const Matrix& m) {
  if (!m.is_symmetric()) throw PreconditionError("matrix is not symmetric");
  Matrix a = m;
  std::vector<std::size_t> live(m.rows());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  std::size_t zero_rows = 0;
  DefinitenessReport out;
  while (!live.empty()) {
    std::vector<std::size_t> keep;
    std::optional<std::size_t> pivot;
    for (auto i : live) {
      if (a(i, i) > 0) return out;
      if (a(i, i) == 0) {
        for (auto j : live)
          if (a(i, j) != 0) return out;
        ++zero_rows;
        continue;
      }
      if (!pivot) pivot = i;
      keep.push_back(i);
    }
    live = std::move(keep);
    if (!pivot) break;
    const std::size_t p = *pivot;
    const Rational d = a(p, p);
    live.erase(std::find(live.begin(), live.end(), p));
    for (auto r : live) {
      if (a(r, p) == 0) continue;
      const Rational f = a(r, p) / d;
      for (auto c : live) a(r, c) -= f * a(p, c);
    }
  }
  out.kernel = kernel(m);
  out.kernel_dim = out.kernel.size();
  if (out.kernel_dim != zero_rows) throw std::logic_error("definiteness: kernel dimension mismatch");
  out.kind = zero_rows == 0 ? DefinitenessKind::negative_definite : DefinitenessKind::negative_semidefinite;
  return out;
}

std::string DynkinClass::summary() const {
  std::vector<std::string> labels;
  for (const auto& c : components) labels.push_back(c.label);
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : "+") + l;
  return out;
}

bool is_affine_label(const std::string& label) { return label.size() > 4 && label.ends_with("^(1)"); }

bool is_finite_label(const std::string& label) { return label != "none" && !is_affine_label(label); }

namespace {

std::string shape_label(const CurveConfig& comp) {
  const std::size_t n = comp.vertices.size();
  if (n == 1) return "A1";
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : comp.edges) {
    const auto a = comp.index(e.a), b = comp.index(e.b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  const std::size_t edges = comp.edges.size();
  std::vector<std::size_t> branch, deg4;
  std::size_t max_deg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    max_deg = std::max(max_deg, adj[i].size());
    if (adj[i].size() == 3) branch.push_back(i);
    if (adj[i].size() == 4) deg4.push_back(i);
  }
  const std::string sn = std::to_string(n);
  if (edges == n) return max_deg == 2 ? "A" + std::to_string(n - 1) + "^(1)" : "none";
  if (edges != n - 1 || max_deg > 4) return "none";
  if (max_deg <= 2) return "A" + sn;
  if (max_deg == 4) return (n == 5 && deg4.size() == 1) ? "D4^(1)" : "none";
  auto leaves_at = [&](std::size_t v) {
    return std::count_if(adj[v].begin(), adj[v].end(), [&](std::size_t u) { return adj[u].size() == 1; });
  };
  if (branch.size() == 2) {
    return (leaves_at(branch[0]) == 2 && leaves_at(branch[1]) == 2) ? "D" + std::to_string(n - 1) + "^(1)" : "none";
  }
  if (branch.size() != 1) return "none";
  std::vector<std::size_t> arms;
  for (auto start : adj[branch[0]]) {
    std::size_t prev = branch[0], cur = start, len = 1;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  const auto p = arms[0], q = arms[1], r = arms[2];
  if (p == 1 && q == 1) return "D" + std::to_string(r + 3);
  if (p == 1 && q == 2 && r >= 2 && r <= 4) return "E" + std::to_string(r + 4);
  if (p == 2 && q == 2 && r == 2) return "E6^(1)";
  if (p == 1 && q == 3 && r == 3) return "E7^(1)";
  if (p == 1 && q == 2 && r == 5) return "E8^(1)";
  return "none";
}

std::vector<std::size_t> unmarked(const CurveConfig& g, const std::vector<std::string>& marked) {
  std::set<std::size_t> m;
  for (const auto& id : marked) m.insert(g.index(id));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (!m.count(i)) out.push_back(i);
  return out;
}

std::vector<std::string> ids_of(const CurveConfig& g) {
  std::vector<std::string> out;
  for (const auto& v : g.vertices) out.push_back(v.id);
  return out;
}

}  // namespace

DynkinClass classify_dynkin(const CurveConfig& g) {
  check_curve_config(g);
  if (!g.simply_laced()) throw PreconditionError("not a simply-laced (-2) configuration");
  DynkinClass out;
  for (const auto& idx : g.components()) {
    const CurveConfig comp = g.induced(idx);
    DynkinComponent c{ids_of(comp), shape_label(comp)};
    const auto rep = definiteness(intersection_matrix(comp));
    const bool consistent =
        (is_finite_label(c.label) && rep.kind == DefinitenessKind::negative_definite) ||
        (is_affine_label(c.label) && rep.kind == DefinitenessKind::negative_semidefinite && rep.kernel_dim == 1) ||
        (c.label == "none" && rep.kind == DefinitenessKind::indefinite_or_other);
    if (!consistent) throw std::logic_error("Dynkin label " + c.label + " contradicts definiteness");
    out.components.push_back(std::move(c));
  }
  return out;
}

StarVerdict check_star(const CurveConfig& g, const std::vector<std::string>& marked) {
  check_curve_config(g);
  const CurveConfig rest = g.induced(unmarked(g, marked));
  for (const auto& idx : rest.components()) {
    const CurveConfig comp = rest.induced(idx);
    const Matrix m = intersection_matrix(comp);
    if (definiteness(m).kind == DefinitenessKind::indefinite_or_other)
      return {false, ids_of(comp), "semidefiniteness"};
    for (std::size_t drop = 0; drop < idx.size(); ++drop) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < idx.size(); ++i)
        if (i != drop) sub.push_back(i);
      if (definiteness(m.principal(sub)).kind != DefinitenessKind::negative_definite)
        return {false, ids_of(comp), "proper subdiagram definiteness"};
    }
  }
  return {};
}

StarVerdict check_star_by_recognition(const CurveConfig& g, const std::vector<std::string>& marked) {
  check_curve_config(g);
  const CurveConfig rest = g.induced(unmarked(g, marked));
  for (const auto& c : classify_dynkin(rest).components)
    if (c.label == "none") return {false, c.vertices, "not a Dynkin shape"};
  return {};
}

namespace {

CurveConfig star_with_arms(const std::vector<long>& arms) {
  CurveConfig g;
  g.vertices.push_back({"c", -2});
  for (std::size_t a = 0; a < arms.size(); ++a) {
    std::string prev = "c";
    for (long t = 1; t <= arms[a]; ++t) {
      std::string id = "a" + std::to_string(a + 1) + "_" + std::to_string(t);
      g.vertices.push_back({id, -2});
      g.edges.push_back({prev, id, 1});
      prev = id;
    }
  }
  return g;
}

CurveConfig path(long n, bool closed) {
  CurveConfig g;
  for (long i = 1; i <= n; ++i) g.vertices.push_back({"v" + std::to_string(i), -2});
  for (long i = 1; i < n; ++i) g.edges.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1), 1});
  if (closed) g.edges.push_back({"v" + std::to_string(n), "v1", 1});
  return g;
}

}  // namespace

CurveConfig dynkin_diagram(const std::string& label) {
  const bool affine = is_affine_label(label);
  const std::string base = affine ? label.substr(0, label.size() - 4) : label;
  if (base.size() < 2) throw InvalidInput("bad Dynkin label " + label);
  const char family = base[0];
  long n = 0;
  try {
    n = std::stol(base.substr(1));
  } catch (const std::exception&) {
    throw InvalidInput("bad Dynkin label " + label);
  }
  if (family == 'A' && !affine && n >= 1) return path(n, false);
  if (family == 'A' && affine && n >= 2) return path(n + 1, true);
  if (family == 'D' && !affine && n >= 4) return star_with_arms({1, 1, n - 3});
  if (family == 'D' && affine && n == 4) return star_with_arms({1, 1, 1, 1});
  if (family == 'D' && affine && n >= 5) {
    CurveConfig g;
    for (long i = 1; i <= n - 3; ++i) g.vertices.push_back({"s" + std::to_string(i), -2});
    for (long i = 1; i < n - 3; ++i) g.edges.push_back({"s" + std::to_string(i), "s" + std::to_string(i + 1), 1});
    const std::string first = "s1", last = "s" + std::to_string(n - 3);
    for (const auto& [leaf, at] : std::vector<std::pair<std::string, std::string>>{
             {"l1", first}, {"l2", first}, {"l3", last}, {"l4", last}}) {
      g.vertices.push_back({leaf, -2});
      g.edges.push_back({at, leaf, 1});
    }
    return g;
  }
  if (family == 'E' && !affine && n >= 6 && n <= 8) return star_with_arms({1, 2, n - 4});
  if (family == 'E' && affine && n == 6) return star_with_arms({2, 2, 2});
  if (family == 'E' && affine && n == 7) return star_with_arms({1, 3, 3});
  if (family == 'E' && affine && n == 8) return star_with_arms({1, 2, 5});
  throw InvalidInput("bad Dynkin label " + label);
}

std::vector<Rational> chain_pullback(long k_prime) {
  if (k_prime < 1) throw PreconditionError("k' must be positive");
  const auto k = static_cast<std::size_t>(k_prime);
  // Thomas algorithm on a_{t-1} - 2a_t + a_{t+1} = 0, a_0 = 0, a_{k+1} = 1.
  std::vector<Rational> c(k), d(k);
  for (std::size_t t = 0; t < k; ++t) {
    const Rational rhs = t + 1 == k ? Rational(-1) : Rational(0);
    const Rational denom = t == 0 ? Rational(-2) : Rational(-2) - c[t - 1];
    c[t] = Rational(1) / denom;
    d[t] = (rhs - (t == 0 ? Rational(0) : d[t - 1])) / denom;
  }
  std::vector<Rational> a(k);
  for (std::size_t t = k; t-- > 0;) a[t] = t + 1 == k ? d[t] : d[t] - c[t] * a[t + 1];
  for (std::size_t t = 0; t < k; ++t) {
    if (a[t] != ratio(static_cast<long>(t + 1), k_prime + 1))
      throw std::logic_error("chain pullback deviates from t/(k'+1)");
  }
  return a;
}

bool integrality_bound(long k, long k_prime) {
  if (k < 1 || k_prime < 1) throw PreconditionError("k and k' must be positive");
  const bool divisible = k % (k_prime + 1) == 0;
  if (divisible && k_prime > k - 1) throw std::logic_error("integrality bound violated");
  return divisible;
}

long duval_point_bound(long d, long n) {
  if (d < 1 || n < 0 || n > 3) throw PreconditionError("need d >= 1 and 0 <= n <= 3");
  const long r = d - n - 1;
  if (r < 0) throw PreconditionError("degenerate: line multiplicity impossible");
  return r;
}

}  // namespace quartic
