#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "borel/ideal.hpp"
#include "borel/monomial.hpp"

namespace borel {

/// Text grammar:
///   monomial := "1" | term ("*" term)*
///   term     := var ("^" uint)?
///   var      := "x" uint | letter a..z   (letters alias x_1..x_26)
///   ideal    := ("borel" | "sfborel") "{" [monomial ("," monomial)*] "}" ("@" uint)?
/// nvars defaults to the largest index mentioned (at least 1) and can be
/// overridden upward with "@n" or the nvars_override argument.
/// Throws parse_error on bad syntax and domain_error on range/kind problems.

Monomial parse_monomial(std::string_view text, std::optional<int> nvars_override = {});
BorelIdeal parse_ideal(std::string_view text, std::optional<int> nvars_override = {});

struct ParsedExpr {
  std::optional<BorelIdeal> ideal;
  std::optional<Monomial> monomial;
};

/// Either form, decided by the leading keyword.
ParsedExpr parse_expr(std::string_view text, std::optional<int> nvars_override = {});

} // namespace borel
