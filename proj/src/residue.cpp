#include "psindex/residue.hpp"

#include "psindex/error.hpp"

namespace psindex {

cplx wres(const ClassicalSymbol& a) {
  const int j = degree_offset(a.order(), -1.0);
  if (j < 0) return 0.0;  // order < -1 or degree -1 not on the grid
  if (j >= a.depth())
    throw Error(ErrorKind::DepthExhausted,
                "degree -1 component lies outside the trusted window");
  const HomComponent& c = a.component(j);
  return mean(trace(c.plus)) + mean(trace(c.minus));
}

}  // namespace psindex
