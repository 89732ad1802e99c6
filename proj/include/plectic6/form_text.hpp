#pragma once

#include <string>
#include <string_view>

#include "plectic6/alternating_form.hpp"

namespace plectic6 {

// Form text format:
//
//   form n=6 k=3
//   # comment
//   1 3 5 1.0
//   1 4 6 -1
//
// One `<i1> ... <ik> <coefficient>` line per nonzero coefficient, indices
// strictly increasing. Repeating a multi-index is an error; absent ones are 0.
// Throws ParseError carrying the 1-based line number.
AlternatingForm parse_form_text(std::string_view text);

std::string format_form_text(const AlternatingForm& form);

}  // namespace plectic6
