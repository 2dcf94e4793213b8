#include "anatomy/factorial_square.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "anatomy/interval.hpp"

namespace anatomy {

std::vector<FactorialSquareSolution> enumerate_solutions(uint64_t x,
                                                         uint64_t hmax) {
    if (x < 4) throw std::domain_error("enumerate_solutions: x must be >= 4");
    std::vector<FactorialSquareSolution> out;
    uint64_t amax = std::max<uint64_t>(default_a_cap(x, hmax), 300);
    FactorialKernelTable table(amax);
    SpfTable spf(std::max<uint64_t>(2, x));
    for (uint64_t a2 = 2; a2 + 1 <= x; ++a2) {
        IntervalProduct ip(a2, 1, spf);
        uint64_t top = std::min(hmax, x - a2);
        for (uint64_t H = 1; H <= top; ++H) {
            if (H > 1) ip.extend(spf);
            for (const auto& w : f3_witnesses(ip, table, table.amax()))
                out.push_back({w.a, a2, a2 + H});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FactorialSquareSolution& l,
                 const FactorialSquareSolution& r) {
                  return std::tie(l.a3, l.a2, l.a1) <
                         std::tie(r.a3, r.a2, r.a1);
              });
    return out;
}

std::vector<SolutionCountRow> solution_count_table(uint64_t x, uint64_t step,
                                                   uint64_t hmax) {
    if (step < 1)
        throw std::domain_error("solution_count_table: step must be >= 1");
    auto sols = enumerate_solutions(x, hmax);
    std::vector<SolutionCountRow> rows;
    size_t i = 0;
    uint64_t total = 0, total_h1 = 0;
    for (uint64_t t = step; t <= x; t += step) {
        while (i < sols.size() && sols[i].a3 <= t) {
            ++total;
            if (sols[i].a3 == sols[i].a2 + 1) ++total_h1;
            ++i;
        }
        rows.push_back({t, total, total_h1,
                        static_cast<double>(total) /
                            std::sqrt(static_cast<double>(t))});
    }
    return rows;
}

}  // namespace anatomy
