#ifndef MONORES_IO_HPP
#define MONORES_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "monores/monomial.hpp"

namespace monores {

struct ParsedIdeal {
    MonomialIdeal ideal;
    /// Number of input monomials removed by minimalization (non-minimal or duplicate).
    std::size_t dropped = 0;
    std::vector<std::string> warnings;
};

/**
 * Text format:
 *
 *     vars: 4
 *     x1^2, x2^2
 *     x3^2
 *     x1*x3
 *     x2 x4
 *
 * One or more comma-separated monomials per line; factors `xK` or `xK^E`
 * joined by `*` or whitespace; `#` starts a comment. The `vars:` header is
 * optional and otherwise inferred from the largest variable index.
 *
 * Throws ParseError with 1-based line and column.
 */
ParsedIdeal parse_ideal_text(std::string_view text);

/// {"variables": N, "generators": [[e1, ..., eN], ...]}
ParsedIdeal parse_ideal_json(std::string_view text);

/// Dispatches on the first non-blank character ('{' means JSON).
ParsedIdeal parse_ideal(std::string_view text);

ParsedIdeal read_ideal_file(const std::string& path);

std::string format_ideal_text(const MonomialIdeal& ideal);
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
std::string format_ideal_json(const MonomialIdeal& ideal);

nlohmann::json to_json(const Multidegree& m);

}  // namespace monores

#endif  // MONORES_IO_HPP
