#include "quartic/generator.hpp"

#include <algorithm>

#include "quartic/errors.hpp"

namespace quartic {

Generator inverse(const Generator& g) {
  if (const auto* a = std::get_if<AutGen>(&g)) return AutGen{a->label, !a->inverse};
  return g;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

std::string to_string(const Generator& g) {
  struct {
    std::string operator()(const PointGen& p) const { return "tau_" + p.point; }
    std::string operator()(const LineGen& l) const { return "tau_" + l.line; }
    std::string operator()(const PairGen& p) const { return "tau_" + p.p1 + p.p2 + "@" + p.line; }
    std::string operator()(const AutGen& a) const { return a.inverse ? a.label + "^-1" : a.label; }
  } visitor;
  return std::visit(visitor, g);
}

std::string to_string(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += to_string(w[i]);
  }
  return out + "]";
}

void check_generator(const QuarticIncidence& config, const Generator& g) {
  if (const auto* p = std::get_if<PointGen>(&g)) {
    const SingularPoint* sp = config.find_point(p->point);
    if (!sp) throw InvalidInput("unknown point " + p->point);
    if (sp->eckardt) throw InvalidInput("point " + p->point + " is eckardt: its involution is regular");
  } else if (const auto* l = std::get_if<LineGen>(&g)) {
    const LineMark* lm = config.find_line(l->line);
    if (!lm) throw InvalidInput("unknown line " + l->line);
    if (lm->eckardt) throw InvalidInput("line " + l->line + " is eckardt: its involution is regular");
    if (lm->points.size() > 2) throw InvalidInput("line " + l->line + " has three nodes: no line involution");
  } else if (const auto* pp = std::get_if<PairGen>(&g)) {
    const LineMark* lm = config.find_line(pp->line);
    if (!lm) throw InvalidInput("unknown line " + pp->line);
    if (lm->eckardt) throw InvalidInput("line " + pp->line + " is eckardt");
    const bool matches = lm->points.size() == 2 && pp->p1 != pp->p2 &&
                         std::find(lm->points.begin(), lm->points.end(), pp->p1) != lm->points.end() &&
                         std::find(lm->points.begin(), lm->points.end(), pp->p2) != lm->points.end();
    if (!matches) throw InvalidInput("pair " + pp->p1 + "," + pp->p2 + " are not the two nodes of " + pp->line);
  } else {
    const auto& a = std::get<AutGen>(g);
    if (!config.find_automorphism(a.label)) throw InvalidInput("unknown automorphism " + a.label);
  }
}

Automorphism resolve_automorphism(const QuarticIncidence& config, const AutGen& a) {
  const Automorphism* base = config.find_automorphism(a.label);
  if (!base) throw InvalidInput("unknown automorphism " + a.label);
  if (!a.inverse) return *base;
  Automorphism inv{a.label + "^-1", {}, {}};
  for (const auto& [from, to] : base->points) inv.points[to] = from;
  for (const auto& [from, to] : base->lines) inv.lines[to] = from;
  return inv;
}

Generator conjugate(const Automorphism& alpha, const Generator& g) {
  if (const auto* p = std::get_if<PointGen>(&g)) return PointGen{alpha.image(p->point)};
  if (const auto* l = std::get_if<LineGen>(&g)) return LineGen{alpha.image(l->line)};
  if (const auto* pp = std::get_if<PairGen>(&g))
    return PairGen{alpha.image(pp->p1), alpha.image(pp->p2), alpha.image(pp->line)};
  return g;
}

}  // namespace quartic
