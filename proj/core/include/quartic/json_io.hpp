#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quartic/degree.hpp"
#include "quartic/generator.hpp"
#include "quartic/incidence.hpp"
#include "quartic/lattice.hpp"
#include "quartic/polynomial.hpp"
#include "quartic/quartic.hpp"

namespace quartic::io {

using nlohmann::json;

/// Parses text; throws ParseError with the reader's message on malformed JSON.
json parse_text(const std::string& text);
std::string read_file(const std::string& path);

Rational rational_from_json(const json& j);
std::string rational_to_json(const Rational& r);

/// Structural errors throw ParseError; semantic validation is left to the caller.
QuarticIncidence config_from_json(const json& j);
json config_to_json(const QuarticIncidence& config);

DegreeVector vector_from_json(const json& j);
json vector_to_json(const DegreeVector& v);

Generator generator_from_json(const json& j);
json generator_to_json(const Generator& g);
Word word_from_json(const json& j);
json word_to_json(const Word& w);

CurveConfig lattice_from_json(const json& j);
json lattice_to_json(const CurveConfig& g);

struct QuarticEquation {
  std::vector<std::string> vars;
  HomogPoly poly;
};

QuarticEquation quartic_from_json(const json& j);
json quartic_to_json(const QuarticEquation& q);

Coordinates coordinates_from_json(const json& j);

json matrix_to_json(const Matrix& m);

}  // namespace quartic::io
