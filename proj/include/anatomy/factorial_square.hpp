#pragma once

#include <cstdint>
#include <vector>

namespace anatomy {

/// a1 < a2 < a3 with a1! a2! a3! a perfect square, certified by kernel
/// equality of s(a1!) and the interval product (a2+1)...a3.
struct FactorialSquareSolution {
    uint64_t a1, a2, a3;
};

/// All solutions with a3 <= x and a3 - a2 <= hmax.
std::vector<FactorialSquareSolution> enumerate_solutions(uint64_t x,
                                                         uint64_t hmax = 64);

struct SolutionCountRow {
    uint64_t t;
    uint64_t count;        // solutions with a3 <= t
    uint64_t count_h1;     // solutions with a3 = a2 + 1
    double ratio_sqrt;     // count / sqrt(t)
};

std::vector<SolutionCountRow> solution_count_table(uint64_t x, uint64_t step,
                                                   uint64_t hmax = 64);

}  // namespace anatomy
