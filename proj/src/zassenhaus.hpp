#pragma once

#include <vector>

#include "zc/field.hpp"

namespace zc::detail {

using ZPoly = std::vector<Integer>;  // integer coefficients, lowest degree first, trimmed

/// Irreducible factors over Z of a primitive squarefree polynomial of degree >= 1
/// with positive leading coefficient. Factors are primitive with positive
/// leading coefficient; their product is f.
std::vector<ZPoly> zassenhaus(const ZPoly& f);

}  // namespace zc::detail
