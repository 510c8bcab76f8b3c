#pragma once

// Algebra descriptors ("cubic:n=2,pairing=A" or JSON objects), element
// expressions over basis labels, and JSON dumps of structure constants.
//
// Descriptor kinds and keys (defaults in parentheses):
//   cubic   n (2), pairing A|B (A), conj_mid true|false (false),
//           variant pairing|scalar-trace (pairing), basis standard|G (standard)
//   vector  n, form alpha|hermitian (alpha)
//   rect    m, n, form transpose|dagger (transpose)
//   zero    dim
//   custom  random-seed, dim (3)   or, in JSON only, an explicit product list
//
// The JSON form of a custom algebra is
//   {"kind":"custom","dim":d,"mode":"trilinear","labels":[...],
//    "product":[{"m":1,"i":1,"j":2,"k":1,"value":"1/2*w"}, ...]}
// with 1-based indices and value the scalar literal of P^m_{ijk}.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ternalg/algebra.hpp"

namespace ternalg {

/// Parse "kind:key=value,..." into its JSON object form. Throws ParseError.
nlohmann::json parse_descriptor(std::string_view text);

/// Build an algebra from a JSON descriptor. Throws ParseError on unknown
/// kinds or keys and on malformed values.
TernaryAlgebra algebra_from_json(const nlohmann::json &spec);

inline TernaryAlgebra algebra_from_descriptor(std::string_view text)
{
  return algebra_from_json(parse_descriptor(text));
}

/// A custom-algebra JSON object whose product tensor is `c`; loading it
/// with algebra_from_json reproduces `c` exactly.
nlohmann::json constants_to_json(const StructureTensor &c, const std::vector<std::string> &labels = {},
                                 Linearity mode = Linearity::Trilinear);

inline nlohmann::json algebra_to_json(const TernaryAlgebra &algebra)
{
  return constants_to_json(algebra.product_tensor(), algebra.labels(), algebra.mode());
}

/// Parse a linear combination of basis labels such as "G3 - i*G4" or
/// "(1/2+w)*X111 + X222". Throws ParseError.
Element parse_element(std::string_view text, const TernaryAlgebra &algebra);

/// One element per entry: a label expression (string) or a coordinate
/// array of scalar literals.
std::vector<Element> parse_elements(const nlohmann::json &list, const TernaryAlgebra &algebra);

/// "G3 - i*G4" style rendering of an element.
std::string format_element(const Element &v, const std::vector<std::string> &labels);

} // namespace ternalg
