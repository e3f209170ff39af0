#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "powersums/bipoly.hpp"
#include "powersums/unipoly.hpp"

namespace powersums {

// Symbol choice for bivariate output: x/y or the A/B shorthand for S_1/S_2.
enum class VarStyle { xy, ab };

// Plain text, terms in descending degree: coefficients as p/q (the /q omitted
// when q = 1, unit coefficients omitted on nonconstant terms), exponents as
// n^e, separators " + " / " - ".
std::string to_plain(const UniPoly& p, std::string_view var = "n");

// Same grammar with bivariate monomials; descending weighted degree 2a + 3b,
// ties broken by descending y exponent.
std::string to_plain(const BiPoly& p, VarStyle style = VarStyle::xy);

std::string to_latex(const UniPoly& p, std::string_view var = "n");
std::string to_latex(const BiPoly& p, VarStyle style = VarStyle::xy);

// {"variables": [...], "terms": [{"exp": [...], "num": "...", "den": "..."}]}
// with big integers as decimal strings, terms in display order.
nlohmann::ordered_json to_json(const UniPoly& p, std::string_view var = "n");
nlohmann::ordered_json to_json(const BiPoly& p, VarStyle style = VarStyle::xy);

// Inverses of to_json: rebuild the canonical polynomial from a document.
// Throw std::invalid_argument on malformed input.
UniPoly unipoly_from_json(const nlohmann::json& doc);
BiPoly bipoly_from_json(const nlohmann::json& doc);

}  // namespace powersums
