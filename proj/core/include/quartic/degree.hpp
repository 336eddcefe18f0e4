#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quartic/generator.hpp"
#include "quartic/incidence.hpp"
#include "quartic/matrix.hpp"
#include "quartic/rational.hpp"

namespace quartic {

/// Known(value) or Unknown (nullopt).
using Multiplicity = std::optional<Rational>;

/// Degree mu and the multiplicities at marked points and lines. Ids missing
/// from `nu` are Unknown.
struct DegreeVector {
  Rational mu{1};
  std::map<std::string, Rational> nu;

  static DegreeVector identity(const QuarticIncidence& config);

  Multiplicity at(const std::string& coordinate) const;
  bool known(const std::string& coordinate) const;
  void set(const std::string& coordinate, Multiplicity value);

  bool operator==(const DegreeVector&) const = default;
};

/// Linear action over an ordered basis whose first entry is "mu".
struct ActionMatrix {
  std::vector<std::string> basis;
  Matrix entries;
  std::set<std::string> untouched;

  std::size_t index(const std::string& coordinate) const;
  bool tracks(const std::string& coordinate) const;
  /// Entries re-indexed over another ordering of the same basis.
  Matrix over(const std::vector<std::string>& order) const;
};

ActionMatrix action_matrix(const QuarticIncidence& config, const Generator& g);

/// M v on tracked coordinates. A tracked output that reads an Unknown input
/// becomes Unknown; an Unknown read by the mu row throws InsufficientData.
DegreeVector apply(const ActionMatrix& m, const DegreeVector& v);
DegreeVector apply(const QuarticIncidence& config, const Generator& g, const DegreeVector& v);
DegreeVector apply_word(const QuarticIncidence& config, const Word& w, const DegreeVector& v);

/// True when every coordinate read with a nonzero coefficient is Known.
bool fully_known(const QuarticIncidence& config, const Generator& g, const DegreeVector& v);

/// Ordered product M_gk ... M_g1 for the word [g1, ..., gk] over the union basis.
ActionMatrix compose(const QuarticIncidence& config, const Word& w);

}  // namespace quartic
