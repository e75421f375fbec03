#pragma once

#include <string>
#include <vector>

#include "rquant/operator.hpp"

namespace rquant::cli {

// Prints an operator series the way the examples are written by hand:
//   R(e1⊗e2) = e2⊗e1 + h e2⊗e0 + 1/2 h^2 e1⊗e0
// one line per basis input, coefficient of h^n for coeffs[n].
std::string action_notation(const std::vector<Op2>& coeffs, const std::string& symbol);

}  // namespace rquant::cli
