/**
 * @file golden_tables.hpp
 * @brief Reference values of the correction mould over the quadratic
 *        alphabet {(1,0), (0,1), (2,-1), (-1,2)}: all 4 resonant words of
 *        length 2 and all 44 of length 4.
 */
#pragma once

#include <cstddef>

namespace isochron::golden {

struct MouldEntry {
    const char* word;   // e.g. "(2,-1).(-1,2)"
    const char* value;  // canonical GaussRat text, e.g. "1/3*i"
};

extern const MouldEntry kLength2Table[4];
extern const MouldEntry kLength4Table[44];

}  // namespace isochron::golden
