#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quartic/generator.hpp"
#include "quartic/incidence.hpp"
#include "quartic/rational.hpp"

namespace quartic {

/// Cancels adjacent equal involutions and adjacent mutually inverse automorphism letters.
Word free_reduce(const Word& w);

/// Replaces every tau_{P1P2} by tau_{P1} tau_L tau_{P2}.
Word expand_pairs(const Word& w);

/// Affine map x -> parity * x + sum translation_i E_i on the fiber group of a
/// line's elliptic fibration. E_i follow the order of the line's points; on a
/// 3-node line vectors are reduced modulo E1+E2+E3 (last entry kept at 0).
struct ClusterElement {
  std::string line;
  int parity = 1;
  std::vector<Integer> translation;

  bool operator==(const ClusterElement&) const = default;
  bool is_identity() const;
};

ClusterElement cluster_identity(const QuarticIncidence& config, const std::string& line);
ClusterElement multiply(const ClusterElement& a, const ClusterElement& b);

/// Letters of the line's cluster model: its non-eckardt nodes, then tau_L if it exists.
std::vector<Generator> cluster_letters(const QuarticIncidence& config, const std::string& line);
bool attached(const QuarticIncidence& config, const std::string& line, const Generator& g);
ClusterElement letter_image(const QuarticIncidence& config, const std::string& line, const Generator& g);

/// Lines to whose cluster every letter of w is attached (all lines for the empty word).
std::vector<std::string> supporting_clusters(const QuarticIncidence& config, const Word& w);

ClusterElement cluster_normal_form(const QuarticIncidence& config, const std::string& line, const Word& w);
/// Uses the first supporting cluster; throws InvalidInput("mixed-cluster word") if none.
ClusterElement cluster_normal_form(const QuarticIncidence& config, const Word& w);

/// Shortest word in the cluster letters for an element (first in letter order among shortest).
Word shortest_cluster_word(const QuarticIncidence& config, const ClusterElement& target,
                           std::size_t max_length);

/// w == automorphisms * body, with every automorphism letter moved to the left.
struct AutSplit {
  Word automorphisms;
  Word body;
};

AutSplit push_auts(const QuarticIncidence& config, const Word& w);

/// True when no relation of the presentation involves a regular involution,
/// i.e. no eckardt 2-node line and no 3-node line through an eckardt point.
bool split_presentation(const QuarticIncidence& config);

enum class Verdict { equal, distinct, undecided };

std::string to_string(Verdict v);

struct EqualityResult {
  Verdict verdict = Verdict::undecided;
  std::string reason;
  std::size_t explored = 0;
};

inline constexpr std::size_t kDefaultRewriteBudget = 10000;

EqualityResult equal(const QuarticIncidence& config, const Word& w1, const Word& w2,
                     std::size_t budget = kDefaultRewriteBudget);

}  // namespace quartic
