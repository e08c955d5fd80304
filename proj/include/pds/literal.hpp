#pragma once

#include <string>
#include <string_view>

#include "pds/cyclo.hpp"

namespace pds {

/// Parses a cyclotomic literal where 'zeta' denotes zeta_L and 'i' denotes
/// zeta_L^{L/4}.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := RATIONAL | 'zeta' ['^' INT] | 'i' | '(' expr ')' | '-' factor
CycloNumber parse_cyclo(std::string_view text, int L);

/// Writes x as a literal over zeta_L. Requires order(x) | L.
std::string format_cyclo(const CycloNumber& x, int L);

}  // namespace pds
