#pragma once

#include <string>
#include <variant>
#include <vector>

#include "quartic/incidence.hpp"

namespace quartic {

struct PointGen {
  std::string point;
  bool operator==(const PointGen&) const = default;
};

struct LineGen {
  std::string line;
  bool operator==(const LineGen&) const = default;
};

/// tau_{P1P2} for the two nodes of a 2-node line. The pair is unordered.
struct PairGen {
  std::string p1;
  std::string p2;
  std::string line;
  bool operator==(const PairGen& o) const {
    return line == o.line && ((p1 == o.p1 && p2 == o.p2) || (p1 == o.p2 && p2 == o.p1));
  }
};

struct AutGen {
  std::string label;
  bool inverse = false;
  bool operator==(const AutGen&) const = default;
};

using Generator = std::variant<PointGen, LineGen, PairGen, AutGen>;
using Word = std::vector<Generator>;

inline bool is_involution(const Generator& g) { return !std::holds_alternative<AutGen>(g); }

Generator inverse(const Generator& g);
Word inverse(const Word& w);

/// Short human-readable form, e.g. "tau_P1", "tau_P1P2@L", "w^-1".
std::string to_string(const Generator& g);
std::string to_string(const Word& w);

/// Throws InvalidInput when g is not a generator for this configuration.
void check_generator(const QuarticIncidence& config, const Generator& g);

/// The automorphism permutation of an Aut letter (taking the inverse flag into account).
Automorphism resolve_automorphism(const QuarticIncidence& config, const AutGen& a);

/// Image of a generator under conjugation by an automorphism: alpha tau_Z alpha^-1 = tau_{alpha(Z)}.
Generator conjugate(const Automorphism& alpha, const Generator& g);

}  // namespace quartic
