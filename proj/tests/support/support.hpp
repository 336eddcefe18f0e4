#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quartic/generator.hpp"
#include "quartic/incidence.hpp"
#include "quartic/lattice.hpp"

namespace quartic::testing {

using Rng = std::mt19937_64;

QuarticIncidence make_config(const std::vector<std::pair<std::string, bool>>& points,
                             const std::vector<std::tuple<std::string, std::vector<std::string>, bool>>& lines);

/// Every valid configuration with 1..max_points points and 1..max_lines lines, including
/// every eckardt flag assignment. Lines are listed in a canonical order so line
/// relabelings are not repeated.
std::vector<QuarticIncidence> all_small_configs(std::size_t max_points, std::size_t max_lines);

/// A random valid configuration; eckardt flags appear with low probability.
QuarticIncidence random_config(Rng& rng);

/// Every Point/Line/PairPoint generator that check_generator accepts.
std::vector<Generator> involution_generators(const QuarticIncidence& config);

/// A random word whose letters each have fully known input data when applied
/// from the identity vector, with no two equal neighbours. When `line` is set the
/// letters come from that cluster only.
Word random_admissible_word(const QuarticIncidence& config, std::size_t max_length, Rng& rng,
                            const std::optional<std::string>& line = std::nullopt);

/// Simple graph as a (-2) curve configuration on vertices v0..v{n-1}.
CurveConfig graph_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Isomorphism classes of simple graphs on exactly n vertices (n <= 7) as adjacency bitmasks.
std::vector<std::vector<std::uint8_t>> graph_classes(std::size_t n);

/// Every graph on <= max_n vertices up to isomorphism for n < max_n, and for n = max_n
/// every one-vertex extension of the (max_n - 1)-vertex classes (covers all classes).
std::vector<CurveConfig> exhaustive_graphs(std::size_t max_n);

}  // namespace quartic::testing
