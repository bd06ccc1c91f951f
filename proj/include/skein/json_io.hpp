// JSON encodings of diagrams, polynomials and results.
#pragma once

#include <istream>
#include <string>

#include <json.hpp>

#include "skein/bracket.hpp"
#include "skein/error.hpp"
#include "skein/diagram.hpp"
#include "skein/homology.hpp"
#include "skein/kauffman.hpp"
#include "skein/laurent.hpp"

namespace skein {

using Json = nlohmann::json;

/// Malformed JSON or a schema violation; the message names the line or field.
class ParseError : public SkeinError {
 public:
  using SkeinError::SkeinError;
};

/// Parses and validates. Schema problems throw ParseError, diagram
/// invariants throw ValidationError.
SlicedDiagram diagram_from_json(const Json& j);
Json diagram_to_json(const SlicedDiagram& d);

SlicedDiagram parse_diagram_text(const std::string& text);
SlicedDiagram parse_diagram_stream(std::istream& in);
/// "-" reads standard input.
SlicedDiagram parse_diagram_file(const std::string& path);

/// Ascending [[exponent, coefficient], ...]; coefficients beyond 64 bits are strings.
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json multicurve_to_json(const LaminarMulticurve& m);
Json bracket_to_json(const BracketElement& b);
Json homclass_to_json(const HomClass& c);
Json kappa_to_json(const KappaImage& k);
Json przytycki_to_json(const PrzytyckiClass& p);

/// {"r": int, "torsion": [int], "s": int, "iota": [[int]], "v0": [int]}.
ManifoldHomologyData homology_from_json(const Json& j);

}  // namespace skein
