#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

#include "l2sig/forms.hpp"
#include "l2sig/laurent.hpp"

namespace l2sig {

/// A form over a finite abelian group or over the integers (Laurent form).
using FormDocument = std::variant<HermitianGroupForm, LaurentHermitianForm>;

/// Parses a form document. Throws ParseError on malformed syntax or schema
/// (line/column are 0 for schema errors that have no text position),
/// DomainError on invalid groups or coefficients, and ValidationError when
/// the matrix is not hermitian.
FormDocument parse_form(std::string_view text);

/// Canonical text: keys sorted, one matrix row per line, terms in element
/// order, rationals as "p/q". parse_form(serialize_form(d)) == d.
std::string serialize_form(const FormDocument& doc);
nlohmann::json form_to_json(const FormDocument& doc);

nlohmann::json group_to_json(const FiniteAbelianGroup& group);

/// "trivial", "cyclic:N" or "abelian:d1,d2,...". DomainError otherwise.
FiniteAbelianGroup parse_group_spec(std::string_view spec);

/// Exact value of "p/q", an integer, or a decimal such as "1e-6" / "0.25".
Rational parse_exact_number(std::string_view text);

}  // namespace l2sig
