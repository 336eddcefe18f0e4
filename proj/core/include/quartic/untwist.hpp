#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quartic/degree.hpp"

namespace quartic {

struct CenterSet {
  std::vector<std::string> points;
  std::vector<std::string> lines;
  /// Unknown coordinates; never treated as centers.
  std::vector<std::string> indeterminate;
  /// Known coordinates with nu == mu exactly; reported, never untwisted.
  std::vector<std::string> canonical;

  bool empty() const noexcept { return points.empty() && lines.empty(); }
};

CenterSet detect_centers(const QuarticIncidence& config, const DegreeVector& v);

struct Admissibility {
  bool ok = true;
  std::string rule;
};

Admissibility check_admissible(const QuarticIncidence& config, const CenterSet& centers);

/// One untwisting step. Throws PreconditionError without centers,
/// InvalidInput on an inadmissible set, InsufficientData when mu cannot be updated.
std::pair<Generator, DegreeVector> untwist_step(const QuarticIncidence& config, const DegreeVector& v);

enum class DescentStatus { complete, stuck, inadmissible };

std::string to_string(DescentStatus s);

struct DescentStep {
  Generator generator;
  DegreeVector after;
};

struct DescentTrace {
  std::vector<DescentStep> steps;
  DegreeVector final;
  DescentStatus status = DescentStatus::complete;
  std::string detail;

  Word generators() const;
};

inline constexpr std::size_t kMaxDescentSteps = 10000;

DescentTrace untwist(const QuarticIncidence& config, const DegreeVector& v);

}  // namespace quartic
