#include "quartic/untwist.hpp"

#include <algorithm>

#include "quartic/errors.hpp"

namespace quartic {

CenterSet detect_centers(const QuarticIncidence& config, const DegreeVector& v) {
  CenterSet c;
  auto scan = [&](const std::string& id, std::vector<std::string>& bucket) {
    auto m = v.at(id);
    if (!m) {
      c.indeterminate.push_back(id);
    } else if (*m > v.mu) {
      bucket.push_back(id);
    } else if (*m == v.mu) {
      c.canonical.push_back(id);
    }
  };
  for (const auto& p : config.points()) scan(p.id, c.points);
  for (const auto& l : config.lines()) scan(l.id, c.lines);
  return c;
}

namespace {

bool on_line(const LineMark& l, const std::string& p) {
  return std::find(l.points.begin(), l.points.end(), p) != l.points.end();
}

Admissibility fail(std::string rule) { return {false, std::move(rule)}; }

}  // namespace

Admissibility check_admissible(const QuarticIncidence& config, const CenterSet& c) {
  if (c.points.size() >= 3) return fail("three points");
  if (c.lines.size() >= 2) return fail("two lines");
  for (const auto& p : c.points)
    if (config.find_point(p)->eckardt) return fail("eckardt point");
  for (const auto& l : c.lines)
    if (config.find_line(l)->eckardt) return fail("eckardt line");

  if (c.points.size() == 2 && c.lines.size() == 1) return fail("two points and a line");

  if (c.points.size() == 2) {
    const LineMark* l = config.joining_line(c.points[0], c.points[1]);
    if (!l) return fail("two points not joined by a marked line");
    if (l->points.size() == 2 && l->eckardt) return fail("two points on an eckardt line");
    for (const auto& q : l->points)
      if (q != c.points[0] && q != c.points[1] && config.find_point(q)->eckardt)
        return fail("two points collinear with an eckardt point");
    return {};
  }
  if (c.lines.size() == 1) {
    const LineMark* l = config.find_line(c.lines[0]);
    if (c.points.empty()) {
      if (l->points.size() > 2) return fail("line with three nodes");
      return {};
    }
    if (!on_line(*l, c.points[0])) return fail("line and a point outside it");
    if (l->points.size() != 2) return fail("point and line without exactly one more node");
    return {};
  }
  return {};
}

std::pair<Generator, DegreeVector> untwist_step(const QuarticIncidence& config, const DegreeVector& v) {
  const CenterSet c = detect_centers(config, v);
  if (c.empty()) throw PreconditionError("no non-canonical center");
  const Admissibility a = check_admissible(config, c);
  if (!a.ok) throw InvalidInput(a.rule);

  Generator g;
  if (!c.lines.empty()) {
    g = LineGen{c.lines[0]};
  } else if (c.points.size() == 1) {
    g = PointGen{c.points[0]};
  } else {
    const LineMark* l = config.joining_line(c.points[0], c.points[1]);
    if (l->points.size() == 2) {
      g = PairGen{l->points[0], l->points[1], l->id};
    } else {
      const auto& a0 = c.points[0];
      const auto& a1 = c.points[1];
      g = PointGen{*v.at(a1) > *v.at(a0) ? a1 : a0};
    }
  }
  return {g, apply(config, g, v)};
}

std::string to_string(DescentStatus s) {
  switch (s) {
    case DescentStatus::complete: return "complete";
    case DescentStatus::stuck: return "stuck";
    case DescentStatus::inadmissible: return "inadmissible";
  }
  return "unknown";
}

Word DescentTrace::generators() const {
  Word w;
  for (const auto& s : steps) w.push_back(s.generator);
  return w;
}

namespace {

bool trivial(const DegreeVector& v) {
  if (v.mu != 1) return false;
  return std::all_of(v.nu.begin(), v.nu.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

DescentTrace untwist(const QuarticIncidence& config, const DegreeVector& v) {
  require_valid(config);
  DescentTrace trace;
  trace.final = v;
  while (true) {
    const CenterSet c = detect_centers(config, trace.final);
    if (c.empty()) {
      if (trivial(trace.final)) {
        trace.status = DescentStatus::complete;
      } else {
        trace.status = DescentStatus::stuck;
        trace.detail = c.indeterminate.empty() ? "no center found but the vector is not the identity"
                                               : "unknown multiplicity at " + c.indeterminate.front();
      }
      return trace;
    }
    if (trace.steps.size() >= kMaxDescentSteps) {
      trace.status = DescentStatus::stuck;
      trace.detail = "step limit reached";
      return trace;
    }
    const Admissibility a = check_admissible(config, c);
    if (!a.ok) {
      trace.status = DescentStatus::inadmissible;
      trace.detail = a.rule;
      return trace;
    }
    try {
      auto [g, next] = untwist_step(config, trace.final);
      if (next.mu >= trace.final.mu || next.mu <= 0) {
        trace.status = DescentStatus::stuck;
        trace.detail = "degree did not decrease";
        return trace;
      }
      trace.steps.push_back({g, next});
      trace.final = std::move(next);
    } catch (const InsufficientData& e) {
      trace.status = DescentStatus::stuck;
      trace.detail = "unknown multiplicity at " + e.coordinate();
      return trace;
    }
  }
}

}  // namespace quartic
