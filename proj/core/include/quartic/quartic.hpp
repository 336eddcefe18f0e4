#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quartic/incidence.hpp"
#include "quartic/matrix.hpp"
#include "quartic/polynomial.hpp"

namespace quartic {

/// Homogeneous coordinates in P^4; normalized so the first nonzero entry is 1.
using ProjPoint = std::vector<Rational>;

ProjPoint normalize_point(ProjPoint p);

struct ProjLine {
  ProjPoint a;
  ProjPoint b;
};

struct ProjPlane {
  ProjPoint a;
  ProjPoint b;
  ProjPoint c;
};

/// Coefficients of a linear form; the hyperplane is its zero set.
using Hyperplane = std::vector<Rational>;

/// Throws PreconditionError unless F is a nonzero homogeneous quartic in five variables.
void require_quartic(const HomogPoly& f);

Matrix hessian(const HomogPoly& f, const ProjPoint& p);

/// Throws PreconditionError("point not on X") when F(p) != 0.
bool is_singular(const HomogPoly& f, const ProjPoint& p);

/// Throws PreconditionError("point is not singular") when p is a smooth point.
bool is_node(const HomogPoly& f, const ProjPoint& p);

bool line_contained(const HomogPoly& f, const ProjLine& l);

/// Largest k with X|_plane = k L + C.
long plane_section_line_multiplicity(const HomogPoly& f, const ProjPlane& plane, const ProjLine& l);

bool tangent_hyperplane_along_line(const HomogPoly& f, const Hyperplane& h, const ProjLine& l);

struct EckardtResult {
  bool is_eckardt = false;
  /// old coordinates = transform * new coordinates; the point sits at (0:0:0:0:1).
  Matrix transform;
  /// F in new coordinates equals w^2 q2 + w q3 + q4 before completing the square.
  HomogPoly q2;
  HomogPoly q3;
  HomogPoly q4;
  /// When eckardt: q3 = q2 * l, and after w -> w - l/2 the equation is w^2 q2 + q4_normal.
  std::optional<std::vector<Rational>> l;
  std::optional<HomogPoly> q4_normal;
};

/// Throws PreconditionError("point is not a node") when p is not a node.
EckardtResult eckardt_normal_form(const HomogPoly& f, const ProjPoint& p);

/// id -> one point (singular point) or two points spanning a line.
using Coordinates = std::map<std::string, std::vector<ProjPoint>>;

struct IncidenceCheck {
  std::string id;
  std::string check;
  bool passed = true;
  std::string detail;
};

struct IncidenceReport {
  std::vector<IncidenceCheck> checks;
  bool ok() const;
  std::vector<IncidenceCheck> mismatches() const;
};

IncidenceReport verify_incidence(const HomogPoly& f, const QuarticIncidence& config, const Coordinates& coords);

}  // namespace quartic
