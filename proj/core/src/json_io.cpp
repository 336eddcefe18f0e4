#include "quartic/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "quartic/errors.hpp"

namespace quartic::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing \"") + key + "\"");
  return *it;
}

std::string string_of(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

bool bool_or(const json& j, const char* key, bool fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw ParseError(std::string("\"") + key + "\" must be a boolean");
  return it->get<bool>();
}

const json& array_of(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  return a;
}

std::map<std::string, std::string> string_map(const json& j, const char* key) {
  std::map<std::string, std::string> out;
  auto it = j.find(key);
  if (it == j.end()) return out;
  if (!it->is_object()) throw ParseError(std::string("\"") + key + "\" must be an object");
  for (const auto& [k, v] : it->items()) out[k] = string_of(v, "automorphism image");
  return out;
}

long integer_of(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long>();
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError("rationals must be strings such as \"3\" or \"-7/2\"");
}

std::string rational_to_json(const Rational& r) { return to_string(r); }

QuarticIncidence config_from_json(const json& j) {
  std::set<std::string> seen;
  auto fresh = [&](const std::string& id) {
    if (!seen.insert(id).second) throw ParseError("duplicate id " + id);
    return id;
  };
  std::vector<SingularPoint> points;
  for (const auto& p : array_of(j, "points")) {
    points.push_back({fresh(string_of(field(p, "id"), "point id")), bool_or(p, "eckardt", false)});
  }
  std::vector<LineMark> lines;
  for (const auto& l : array_of(j, "lines")) {
    LineMark m;
    m.id = fresh(string_of(field(l, "id"), "line id"));
    for (const auto& q : array_of(l, "points")) m.points.push_back(string_of(q, "line point"));
    m.eckardt = bool_or(l, "eckardt", false);
    lines.push_back(std::move(m));
  }
  std::vector<Automorphism> auts;
  if (j.contains("automorphisms")) {
    std::set<std::string> labels;
    for (const auto& a : array_of(j, "automorphisms")) {
      Automorphism aut;
      aut.label = string_of(field(a, "label"), "automorphism label");
      if (!labels.insert(aut.label).second) throw ParseError("duplicate automorphism label " + aut.label);
      aut.points = string_map(a, "points");
      aut.lines = string_map(a, "lines");
      auts.push_back(std::move(aut));
    }
  }
  return QuarticIncidence(std::move(points), std::move(lines), std::move(auts));
}

json config_to_json(const QuarticIncidence& config) {
  json points = json::array(), lines = json::array();
  for (const auto& p : config.points()) points.push_back({{"id", p.id}, {"eckardt", p.eckardt}});
  for (const auto& l : config.lines()) lines.push_back({{"id", l.id}, {"points", l.points}, {"eckardt", l.eckardt}});
  json out{{"points", points}, {"lines", lines}};
  if (!config.automorphisms().empty()) {
    json auts = json::array();
    for (const auto& a : config.automorphisms())
      auts.push_back({{"label", a.label}, {"points", a.points}, {"lines", a.lines}});
    out["automorphisms"] = auts;
  }
  return out;
}

DegreeVector vector_from_json(const json& j) {
  DegreeVector v;
  v.mu = rational_from_json(field(j, "mu"));
  if (j.contains("nu")) {
    const json& nu = j.at("nu");
    if (!nu.is_object()) throw ParseError("\"nu\" must be an object");
    for (const auto& [k, x] : nu.items()) {
      if (x.is_null()) continue;
      v.nu[k] = rational_from_json(x);
    }
  }
  return v;
}

json vector_to_json(const DegreeVector& v) {
  json nu = json::object();
  for (const auto& [k, x] : v.nu) nu[k] = rational_to_json(x);
  return {{"mu", rational_to_json(v.mu)}, {"nu", nu}};
}

Generator generator_from_json(const json& j) {
  const std::string type = string_of(field(j, "type"), "letter type");
  if (type == "point") return PointGen{string_of(field(j, "id"), "point id")};
  if (type == "line") return LineGen{string_of(field(j, "id"), "line id")};
  if (type == "pair") {
    const json& ids = field(j, "ids");
    if (!ids.is_array() || ids.size() != 2) throw ParseError("\"ids\" of a pair letter must hold two ids");
    return PairGen{string_of(ids[0], "pair id"), string_of(ids[1], "pair id"), string_of(field(j, "line"), "pair line")};
  }
  if (type == "aut") return AutGen{string_of(field(j, "label"), "automorphism label"), bool_or(j, "inverse", false)};
  throw ParseError("unknown letter type " + type);
}

json generator_to_json(const Generator& g) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PointGen>) {
          return {{"type", "point"}, {"id", x.point}};
        } else if constexpr (std::is_same_v<T, LineGen>) {
          return {{"type", "line"}, {"id", x.line}};
        } else if constexpr (std::is_same_v<T, PairGen>) {
          return {{"type", "pair"}, {"ids", {x.p1, x.p2}}, {"line", x.line}};
        } else {
          json out{{"type", "aut"}, {"label", x.label}};
          if (x.inverse) out["inverse"] = true;
          return out;
        }
      },
      g);
}

Word word_from_json(const json& j) {
  Word w;
  for (const auto& letter : array_of(j, "word")) w.push_back(generator_from_json(letter));
  return w;
}

json word_to_json(const Word& w) {
  json letters = json::array();
  for (const auto& g : w) letters.push_back(generator_to_json(g));
  return {{"word", letters}};
}

CurveConfig lattice_from_json(const json& j) {
  CurveConfig g;
  std::set<std::string> seen;
  for (const auto& v : array_of(j, "vertices")) {
    CurveVertex cv;
    cv.id = string_of(field(v, "id"), "vertex id");
    if (!seen.insert(cv.id).second) throw ParseError("duplicate id " + cv.id);
    if (v.contains("self")) cv.self = integer_of(v.at("self"), "\"self\"");
    g.vertices.push_back(std::move(cv));
  }
  if (j.contains("edges")) {
    for (const auto& e : array_of(j, "edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) throw ParseError("edges are [a, b] or [a, b, m]");
      CurveEdge ce{string_of(e[0], "edge end"), string_of(e[1], "edge end"), 1};
      if (e.size() == 3) ce.multiplicity = integer_of(e[2], "edge multiplicity");
      g.edges.push_back(std::move(ce));
    }
  }
  return g;
}

json lattice_to_json(const CurveConfig& g) {
  json vs = json::array(), es = json::array();
  for (const auto& v : g.vertices) vs.push_back({{"id", v.id}, {"self", v.self}});
  for (const auto& e : g.edges) es.push_back({e.a, e.b, e.multiplicity});
  return {{"vertices", vs}, {"edges", es}};
}

QuarticEquation quartic_from_json(const json& j) {
  QuarticEquation q;
  std::set<std::string> seen;
  for (const auto& v : array_of(j, "vars")) {
    q.vars.push_back(string_of(v, "variable name"));
    if (!seen.insert(q.vars.back()).second) throw ParseError("duplicate variable " + q.vars.back());
  }
  q.poly = HomogPoly(q.vars.size());
  for (const auto& t : array_of(j, "terms")) {
    const Rational c = rational_from_json(field(t, "coef"));
    Exponents e;
    for (const auto& x : array_of(t, "exps")) {
      const long k = integer_of(x, "exponent");
      if (k < 0) throw ParseError("negative exponent");
      e.push_back(static_cast<int>(k));
    }
    if (e.size() != q.vars.size()) throw ParseError("exponent vector length differs from the variable count");
    q.poly.add_term(e, c);
  }
  return q;
}

json quartic_to_json(const QuarticEquation& q) {
  json terms = json::array();
  for (const auto& [e, c] : q.poly.terms()) terms.push_back({{"coef", rational_to_json(c)}, {"exps", e}});
  return {{"vars", q.vars}, {"terms", terms}};
}

Coordinates coordinates_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("coordinates must be an object keyed by id");
  Coordinates out;
  auto point_of = [](const json& a) {
    if (!a.is_array()) throw ParseError("a point is an array of rational strings");
    ProjPoint p;
    for (const auto& x : a) p.push_back(rational_from_json(x));
    return p;
  };
  for (const auto& [id, value] : j.items()) {
    if (!value.is_array() || value.empty()) throw ParseError("coordinates of " + id + " must be a nonempty array");
    std::vector<ProjPoint> pts;
    if (value[0].is_array()) {
      for (const auto& a : value) pts.push_back(point_of(a));
    } else {
      pts.push_back(point_of(value));
    }
    out[id] = std::move(pts);
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace quartic::io
