#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quartic {

struct SingularPoint {
  std::string id;
  bool eckardt = false;
  bool operator==(const SingularPoint&) const = default;
};

struct LineMark {
  std::string id;
  std::vector<std::string> points;
  bool eckardt = false;
  bool operator==(const LineMark&) const = default;
};

/// Abstract automorphism given by its action on marked ids; ids absent from
/// a map are fixed.
struct Automorphism {
  std::string label;
  std::map<std::string, std::string> points;
  std::map<std::string, std::string> lines;

  std::string image(const std::string& id) const;
  std::string preimage(const std::string& id) const;
  bool operator==(const Automorphism&) const = default;
};

struct Violation {
  std::string id;
  std::string rule;
  bool operator==(const Violation&) const = default;
};

/// Combinatorial data of the marked nodes and lines. Point and line ids share
/// one namespace; "mu" is reserved for the degree coordinate.
class QuarticIncidence {
 public:
  QuarticIncidence() = default;
  QuarticIncidence(std::vector<SingularPoint> points, std::vector<LineMark> lines,
                   std::vector<Automorphism> automorphisms = {});

  const std::vector<SingularPoint>& points() const noexcept { return points_; }
  const std::vector<LineMark>& lines() const noexcept { return lines_; }
  const std::vector<Automorphism>& automorphisms() const noexcept { return automorphisms_; }

  const SingularPoint* find_point(const std::string& id) const;
  const LineMark* find_line(const std::string& id) const;
  const Automorphism* find_automorphism(const std::string& label) const;

  /// Lines containing the point, in declaration order.
  std::vector<const LineMark*> lines_through(const std::string& point) const;
  /// A marked line containing both points, if any.
  const LineMark* joining_line(const std::string& a, const std::string& b) const;

  /// Every coordinate name: point ids, then line ids.
  std::vector<std::string> coordinates() const;

 private:
  std::vector<SingularPoint> points_;
  std::vector<LineMark> lines_;
  std::vector<Automorphism> automorphisms_;
  std::map<std::string, std::size_t> point_index_;
  std::map<std::string, std::size_t> line_index_;
};

inline constexpr const char* kMuCoordinate = "mu";

std::vector<Violation> validate(const QuarticIncidence& config);

/// Throws InvalidInput listing the first violation.
void require_valid(const QuarticIncidence& config);

struct Cluster {
  std::string line;
  std::vector<std::string> points;
  bool has_line_involution = false;
  bool regular_only = false;
  bool operator==(const Cluster&) const = default;
};

std::vector<Cluster> clusters(const QuarticIncidence& config);

}  // namespace quartic
