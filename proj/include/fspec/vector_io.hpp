#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fspec/hilbert_vectors.hpp"
#include "fspec/spectral_measures.hpp"

namespace fspec {

// Inline vector grammar: terms `c*e<int>` or `e<int>` joined by + / -, where
// c is a real or complex literal (`0.5`, `2i`, `(1+0.5i)`); frequencies may
// carry their own sign directly after `e`. Examples: "e0+e5",
// "0.5*e1-0.5*e4", "(0+1i)*e-3". Throws parse_error with the offending
// position.
FreqVector parse_vector_expr(std::string_view expr);

// JSON vector files: {"entries":[{"index":"<decimal string>","re":..,"im":..}]}.
// Indices serialize as decimal strings to avoid precision loss in JSON
// numbers.
FreqVector vector_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const FreqVector& f);

FreqVector load_vector_file(const std::string& path);
void save_vector_file(const FreqVector& f, const std::string& path);

// `--vec` CLI argument: a readable file path is loaded as JSON, anything
// else is parsed with the inline grammar.
FreqVector resolve_vector_argument(const std::string& arg);

// Trig polynomial grammar: terms `c*z^k`, `z^k`, `z`, or a bare constant,
// joined by + / -; k may be negative ("z^-2+0.5*z").
TrigPoly parse_trig_poly(std::string_view expr);

} // namespace fspec
