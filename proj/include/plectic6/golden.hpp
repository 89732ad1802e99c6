#pragma once

#include <vector>

#include "plectic6/report.hpp"

namespace plectic6 {

// Reference checks against the hand-derived values for the family
// alpha^t = dx^{135} - dx^{146} - dx^{236} + t dx^{245}: its six contractions,
// its J matrix, lambda = 24 t, the three normal forms, and the x2 scan.
// Expected values are literal tables, independent of the library code paths.
std::vector<VerifyItem> run_golden_checks();

}  // namespace plectic6
