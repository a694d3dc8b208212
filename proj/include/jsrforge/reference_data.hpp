#pragma once

#include <array>
#include <vector>

#include "jsrforge/mat2.hpp"
#include "jsrforge/word.hpp"

namespace jsrforge {

/// Bundled example pair whose shortest chiral pair of products is jointly
/// spectrum maximizing. Single source of truth for the demo command and the
/// golden tests.
inline Mat2 example_pair_A() { return Mat2{0.81427, -0.32898, 0.73419, 0.50393}; }
inline Mat2 example_pair_B() { return Mat2{-0.06078, 1.01008, -0.88368, -0.26830}; }

/// The two maximizing products of the example pair: mutual mirror images,
/// not rotations of one another.
inline std::vector<Word> example_smp_candidates() {
    return {parse_word("a2bab2"), parse_word("b2aba2")};
}

/// Closest competitor of the example pair; becomes the unique maximizing
/// product once B's (2,1) entry is shifted by +0.005.
inline Word example_runner_up() { return parse_word("a3ba2b"); }

/// Known-good 5-tuples with chiral maximizing products, used by the table
/// reproduction check. vertex_pairs is the expected invariant-polygon size
/// in antipodal vertex pairs.
struct ReferenceRow {
    Tuple5 tuple;
    const char* smp;
    int vertex_pairs;
};

inline const std::array<ReferenceRow, 8>& reference_table() {
    static const std::array<ReferenceRow, 8> rows = {{
        {{3.38477, -0.84501, 5.58856, 4.29803, 5.99245}, "a2b2ab", 18},
        {{-1.81325, 3.83802, 8.57711, 8.79352, 7.69271}, "a2b2ab", 18},
        {{-0.28009, 2.51662, -9.78050, 7.09393, 3.76472}, "a3bab2", 34},
        {{-2.41561, 4.01089, -10.27036, 8.39182, 4.16903}, "a3bab2", 40},
        {{-2.27713, -4.85077, -3.83135, 7.50043, 7.58161}, "a2b2ab3", 19},
        {{-2.46102, -5.50086, -4.86349, 9.90656, 9.80116}, "a2b2ab3", 23},
        {{2.48264, -0.68806, 3.67748, 2.74344, 3.59137}, "a2ba2bab2", 30},
        {{3.16180, -0.93207, 5.83803, 4.74510, 5.58561}, "a2ba2bab2", 30},
    }};
    return rows;
}

}  // namespace jsrforge
