#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Line-based algebra description:
///
///     # comment
///     field rational            (or: field prime 5)
///     dim 3
///     names e1 e2 e3            (optional)
///     e1 e3 -> -2*e1
///     e2 e2 -> e1
///     e3 e2 -> e2
///
/// Unlisted brackets are zero. Errors are ParseError carrying the line number;
/// a table violating the right identity raises IdentityViolation.
LeibnizAlgebra parse_algebra_text(std::string_view text);

/// JSON form with the same content:
///
///     {"field": "rational", "dim": 3, "names": ["e1","e2","e3"],
///      "brackets": [{"x": "e1", "y": "e3", "result": {"e1": "-2"}}, ...]}
///
/// "field" is "rational" or "prime:P".
LeibnizAlgebra parse_algebra_json(std::string_view text);

/// Dispatches on content: JSON when the first non-blank character is '{'.
LeibnizAlgebra load_algebra_file(const std::filesystem::path& path);

std::string format_algebra_text(const LeibnizAlgebra& L);
std::string format_algebra_json(const LeibnizAlgebra& L);

/// Parses `c1*e1 + c2*e2 - e3` (or `0`) against the basis names.
Vector parse_linear_combination(std::string_view text, const std::vector<std::string>& names, const FieldSpec& f);
std::string format_linear_combination(const Vector& v, const std::vector<std::string>& names);

}  // namespace leibniz
