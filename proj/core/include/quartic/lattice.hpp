#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quartic/matrix.hpp"
#include "quartic/rational.hpp"

namespace quartic {

struct CurveVertex {
  std::string id;
  long self = -2;
};

struct CurveEdge {
  std::string a;
  std::string b;
  long multiplicity = 1;
};

/// Configuration of curves on a surface with its intersection numbers.
struct CurveConfig {
  std::vector<CurveVertex> vertices;
  std::vector<CurveEdge> edges;

  std::size_t index(const std::string& id) const;
  bool simply_laced() const;
  /// Connected components as index lists, ordered by smallest member.
  std::vector<std::vector<std::size_t>> components() const;
  CurveConfig induced(const std::vector<std::size_t>& idx) const;
};

/// Throws InvalidInput on duplicate ids, self-edges, unknown ids or multiplicity < 1.
void check_curve_config(const CurveConfig& g);

Matrix intersection_matrix(const CurveConfig& g);

enum class DefinitenessKind { negative_definite, negative_semidefinite, indefinite_or_other };

std::string to_string(DefinitenessKind k);

struct DefinitenessReport {
  DefinitenessKind kind = DefinitenessKind::indefinite_or_other;
  std::size_t kernel_dim = 0;
  std::vector<std::vector<Rational>> kernel;
};

DefinitenessReport definiteness(const Matrix& m);

struct DynkinComponent {
  std::vector<std::string> vertices;
  std::string label;  // "A3", "E6", "D4^(1)", ... or "none"
};

struct DynkinClass {
  std::vector<DynkinComponent> components;

  /// Labels sorted and joined by "+", e.g. "A1+A1+A3".
  std::string summary() const;
};

bool is_affine_label(const std::string& label);
bool is_finite_label(const std::string& label);

/// Shape recognition per component. Throws PreconditionError
/// ("not a simply-laced (-2) configuration") on other inputs.
DynkinClass classify_dynkin(const CurveConfig& g);

struct StarVerdict {
  bool holds = true;
  std::vector<std::string> witness;  // failing component
  std::string clause;                // "semidefiniteness", "proper subdiagram definiteness", "not a Dynkin shape"
};

/// Condition (*) by definition: each component of the unmarked curves is
/// negative semidefinite and negative definite after deleting any one vertex.
StarVerdict check_star(const CurveConfig& g, const std::vector<std::string>& marked);

/// Condition (*) by shape: each component of the unmarked curves is a finite or affine Dynkin diagram.
StarVerdict check_star_by_recognition(const CurveConfig& g, const std::vector<std::string>& marked);

/// Standard diagram for a label such as "A5", "D4", "E8", "A3^(1)", "E6^(1)".
CurveConfig dynkin_diagram(const std::string& label);

/// Solves 2a_1 = a_2, a_{t+1} - 2a_t + a_{t-1} = 0, 1 - 2a_k + a_{k-1} = 0 exactly.
std::vector<Rational> chain_pullback(long k_prime);

/// True iff (k' + 1) divides k.
bool integrality_bound(long k, long k_prime);

/// d - n - 1; throws PreconditionError when negative or out of range.
long duval_point_bound(long d, long n);

struct CorollaryCase {
  std::string label;
  std::string description;
  CurveConfig config;
  std::vector<std::string> expected;  // sorted component labels
};

const std::vector<CorollaryCase>& corollary_cases();

struct CorollaryResult {
  CorollaryCase data;
  DynkinClass found;
  StarVerdict star;
  bool type_matches = false;
};

/// Throws InvalidInput for an unknown label.
CorollaryResult corollary_case(const std::string& label);

}  // namespace quartic
