#pragma once

#include "lmmt/lie_algebra.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lmmt {

/// Malformed input text; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

using ParameterMap = std::map<std::string, Rational, std::less<>>;
/// Parameter name -> values the caller considers degenerate.
using ParameterExclusions = std::map<std::string, std::vector<Rational>, std::less<>>;

struct SalamonParse {
    LieAlgebra algebra;
    std::vector<std::string> warnings;
};

/// Reads a comma separated list of d e^k expansions, e.g. "0,12,mu.13".
///
///   algebra := expr ("," expr)*
///   expr    := "0" | term (("+"|"-") term)*
///   term    := [coef "."] pair
///   coef    := rational | identifier
///   pair    := digit digit | "[" int "," int "]"
///
/// Whitespace and one pair of enclosing parentheses are ignored; a leading
/// sign on the first term and the Unicode minus are accepted. Throws
/// ParseError for syntax errors and unbound identifiers, JacobiError when
/// d^2 != 0.
SalamonParse parse_salamon_checked(std::string_view text, const ParameterMap& params = {},
                                   const ParameterExclusions& exclusions = {});
LieAlgebra parse_salamon(std::string_view text, const ParameterMap& params = {});

/// Inverse of parse_salamon for algebras with rational structure constants.
std::string to_salamon(const LieAlgebra& g);

/// Inline form text such as "e123 + 1/2*e145 - e1_10_11"; indices above 9
/// need '_' separators. The ambient dimension is `n`, or the largest index
/// when n == 0.
KForm parse_form_text(std::string_view text, unsigned n = 0);

}  // namespace lmmt
