#include "quartic/incidence.hpp"

#include <algorithm>
#include <set>

#include "quartic/errors.hpp"

namespace quartic {

std::string Automorphism::image(const std::string& id) const {
  if (auto it = points.find(id); it != points.end()) return it->second;
  if (auto it = lines.find(id); it != lines.end()) return it->second;
  return id;
}

std::string Automorphism::preimage(const std::string& id) const {
  for (const auto* m : {&points, &lines}) {
    for (const auto& [from, to] : *m)
      if (to == id) return from;
  }
  return id;
}

QuarticIncidence::QuarticIncidence(std::vector<SingularPoint> points, std::vector<LineMark> lines,
                                   std::vector<Automorphism> automorphisms)
    : points_(std::move(points)), lines_(std::move(lines)), automorphisms_(std::move(automorphisms)) {
  for (std::size_t i = 0; i < points_.size(); ++i) point_index_.emplace(points_[i].id, i);
  for (std::size_t i = 0; i < lines_.size(); ++i) line_index_.emplace(lines_[i].id, i);
}

const SingularPoint* QuarticIncidence::find_point(const std::string& id) const {
  auto it = point_index_.find(id);
  return it == point_index_.end() ? nullptr : &points_[it->second];
}

const LineMark* QuarticIncidence::find_line(const std::string& id) const {
  auto it = line_index_.find(id);
  return it == line_index_.end() ? nullptr : &lines_[it->second];
}

const Automorphism* QuarticIncidence::find_automorphism(const std::string& label) const {
  for (const auto& a : automorphisms_)
    if (a.label == label) return &a;
  return nullptr;
}

std::vector<const LineMark*> QuarticIncidence::lines_through(const std::string& point) const {
  std::vector<const LineMark*> out;
  for (const auto& l : lines_)
    if (std::find(l.points.begin(), l.points.end(), point) != l.points.end()) out.push_back(&l);
  return out;
}

const LineMark* QuarticIncidence::joining_line(const std::string& a, const std::string& b) const {
  for (const auto* l : lines_through(a))
    if (std::find(l->points.begin(), l->points.end(), b) != l->points.end()) return l;
  return nullptr;
}

std::vector<std::string> QuarticIncidence::coordinates() const {
  std::vector<std::string> out;
  for (const auto& p : points_) out.push_back(p.id);
  for (const auto& l : lines_) out.push_back(l.id);
  return out;
}

namespace {

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

void check_automorphism(const QuarticIncidence& c, const Automorphism& a, std::vector<Violation>& out) {
  const std::string tag = "aut " + a.label;
  for (const auto& [from, to] : a.points) {
    if (!c.find_point(from) || !c.find_point(to)) {
      out.push_back({tag, "automorphism maps unknown point"});
      return;
    }
  }
  for (const auto& [from, to] : a.lines) {
    if (!c.find_line(from) || !c.find_line(to)) {
      out.push_back({tag, "automorphism maps unknown line"});
      return;
    }
  }
  std::set<std::string> images;
  for (const auto& id : c.coordinates()) images.insert(a.image(id));
  if (images.size() != c.coordinates().size()) {
    out.push_back({tag, "automorphism is not a bijection"});
    return;
  }
  for (const auto& p : c.points()) {
    if (c.find_point(a.image(p.id))->eckardt != p.eckardt) {
      out.push_back({tag, "automorphism does not preserve eckardt flags"});
      return;
    }
  }
  for (const auto& l : c.lines()) {
    const LineMark* img = c.find_line(a.image(l.id));
    if (img->eckardt != l.eckardt) {
      out.push_back({tag, "automorphism does not preserve eckardt flags"});
      return;
    }
    if (img->points.size() != l.points.size()) {
      out.push_back({tag, "automorphism does not preserve incidence"});
      return;
    }
    for (const auto& p : l.points) {
      if (!contains(img->points, a.image(p))) {
        out.push_back({tag, "automorphism does not preserve incidence"});
        return;
      }
    }
  }
}

}  // namespace

std::vector<Violation> validate(const QuarticIncidence& c) {
  std::vector<Violation> out;
  std::set<std::string> seen;
  for (const auto& id : c.coordinates()) {
    if (id.empty()) out.push_back({id, "empty id"});
    if (id == kMuCoordinate) out.push_back({id, "reserved id"});
    if (!seen.insert(id).second) out.push_back({id, "duplicate id"});
  }
  for (const auto& l : c.lines()) {
    if (l.points.empty()) out.push_back({l.id, "line with no points"});
    if (l.points.size() > 3) out.push_back({l.id, "line with " + std::to_string(l.points.size()) + " points"});
    std::set<std::string> on_line;
    for (const auto& p : l.points) {
      if (!c.find_point(p)) out.push_back({l.id, "unknown point " + p});
      if (!on_line.insert(p).second) out.push_back({l.id, "repeated point " + p});
    }
    if (l.points.size() == 2) {
      for (const auto& p : l.points) {
        const SingularPoint* sp = c.find_point(p);
        if (sp && sp->eckardt) out.push_back({p, "eckardt point on 2-point line"});
      }
    }
  }
  const auto& lines = c.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      int shared = 0;
      for (const auto& p : lines[i].points) shared += contains(lines[j].points, p) ? 1 : 0;
      if (shared >= 2) out.push_back({lines[i].id + "," + lines[j].id, "lines share two points"});
    }
  }
  std::set<std::string> labels;
  for (const auto& a : c.automorphisms()) {
    if (!labels.insert(a.label).second) out.push_back({"aut " + a.label, "duplicate automorphism label"});
    check_automorphism(c, a, out);
  }
  return out;
}

void require_valid(const QuarticIncidence& config) {
  const auto report = validate(config);
  if (!report.empty()) {
    throw InvalidInput("invalid configuration: " + report.front().rule + " (" + report.front().id + ")");
  }
}

std::vector<Cluster> clusters(const QuarticIncidence& config) {
  require_valid(config);
  std::vector<Cluster> out;
  for (const auto& l : config.lines()) {
    Cluster c{l.id, l.points, false, l.eckardt};
    c.has_line_involution = !l.eckardt && l.points.size() <= 2;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace quartic
