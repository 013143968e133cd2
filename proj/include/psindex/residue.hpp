#pragma once

#include "psindex/symbol.hpp"

namespace psindex {

/// Wodzicki residue on the circle: mean(tr plus_{-1}) + mean(tr minus_{-1}).
/// Zero when the symbol has no component of degree -1 (order below -1 or a
/// non-integral order). Throws DepthExhausted when degree -1 lies below the
/// trusted window.
cplx wres(const ClassicalSymbol& a);

}  // namespace psindex
