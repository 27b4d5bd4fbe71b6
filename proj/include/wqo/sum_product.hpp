#pragma once

#include "wqo/kernel.hpp"

namespace wqo {

/// Elements and ideals are Tagged(side, value) with side 1 or 2; sides are
/// incomparable.
PresentationPtr disjoint_sum(PresentationPtr X1, PresentationPtr X2);

/// Every element of side 1 lies below every element of side 2. A side-2
/// ideal Tagged(2, J) denotes {1} x X1 union {2} x J.
PresentationPtr lex_sum(PresentationPtr X1, PresentationPtr X2);

/// Cartesian product under the componentwise order. Elements are
/// Pair(x1, x2); ideals are Pair(I1, I2) denoting I1 x I2.
PresentationPtr product(PresentationPtr X1, PresentationPtr X2);

}  // namespace wqo
