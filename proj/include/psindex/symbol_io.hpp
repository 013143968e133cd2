#pragma once

#include <string>
#include <string_view>

#include "psindex/symbol.hpp"

namespace psindex {

/// Reads the line-oriented symbol format:
///
///   order 0
///   depth 3
///   matrix 2            # optional, default 1
///   component 0
///   plus:  [ exp(i*1*x) , 0 ; 0 , 1 ]
///   minus: [ 1 , 0 ; 0 , 1 ]
///
/// Expressions combine numbers, `i`, exp(+-i*k*x), cos(k*x), sin(k*x) with
/// + - * and parentheses. Throws Error(ParseError) with line and column.
ClassicalSymbol parse_symbol(std::string_view text);

/// Parses a single coefficient expression (no matrix brackets).
CoeffFn parse_coeff_expr(std::string_view text);

/// Inverse of parse_symbol; numbers use 17 significant digits so that
/// parse(render(a)) == a up to pruning. Zero components are omitted.
std::string render_symbol(const ClassicalSymbol& a);
std::string render_coeff(const CoeffFn& f);

ClassicalSymbol read_symbol_file(const std::string& path);

}  // namespace psindex
