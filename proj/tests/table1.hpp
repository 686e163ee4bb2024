#pragma once

// Basis elements of QH*(Fl_3) by grading (i, j) under the order (alpha_1), -2 <= i <= 4, 0 <= j <= 6.
// Rows run from i = 4 down to i = -2.

#include <array>
#include <string>

namespace table1 {

inline const std::array<std::array<const char*, 7>, 7> kCells = {{
    {"q1^2", "q1^2*s[2]", "q1^2*s[1,2]", "q1^2*q2*s[1]", "q1^2*q2*s[2,1]", "q1^2*q2*s[1,2,1]", "q1^3*q2^2"},
    {"q1*s[1]", "q1*s[2,1]", "q1*s[1,2,1]", "q1^2*q2", "q1^2*q2*s[2]", "q1^2*q2*s[1,2]", "q1^2*q2^2*s[1]"},
    {"q1", "q1*s[2]", "q1*s[1,2]", "q1*q2*s[1]", "q1*q2*s[2,1]", "q1*q2*s[1,2,1]", "q1^2*q2^2"},
    {"s[1]", "s[2,1]", "s[1,2,1]", "q1*q2", "q1*q2*s[2]", "q1*q2*s[1,2]", "q1*q2^2*s[1]"},
    {"1", "s[2]", "s[1,2]", "q2*s[1]", "q2*s[2,1]", "q2*s[1,2,1]", "q1*q2^2"},
    {"0", "0", "0", "q2", "q2*s[2]", "q2*s[1,2]", "q2^2*s[1]"},
    {"0", "0", "0", "0", "0", "0", "q2^2"},
}};

}  // namespace table1
