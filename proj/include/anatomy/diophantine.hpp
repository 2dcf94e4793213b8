#pragma once

#include <cstdint>
#include <vector>

#include "anatomy/interval.hpp"

namespace anatomy {

/// Solution of u*x^2 - v*y^2 = 1.
struct PellSolution {
    uint64_t u, v;
    uint64_t x, y;
};

struct HyperbolaQuery {
    uint64_t a, b;
    int64_t h;   // nonzero
    uint64_t x;  // bound on n
};

/// Minimal (x,y) with x^2 - D y^2 = 1, via the continued fraction of
/// sqrt(D).  D must not be a perfect square.
PellSolution pell_fundamental(uint64_t D);

/// All (x,y) with u x^2 - v y^2 = 1 and y <= ybound, by y-scan with exact
/// square testing.
std::vector<PellSolution> pell_like_solutions(uint64_t u, uint64_t v,
                                              uint64_t ybound);

struct F3PellMember {
    uint64_t member;  // v y^2 + 1
    uint64_t u, v, x, y;
    uint64_t witness_a;  // verified via interval replay
};

/// Members of F3 built from factorizations a! = u v and Pell-type
/// solutions u x^2 - v y^2 = 1 (each {v y^2, v y^2 + 1} replayed through
/// the interval classifier).
std::vector<F3PellMember> f3_from_pell(uint64_t a, uint64_t ybound,
                                       const FactorialKernelTable& table);

/// #{(n,m) in N^2 : a n^2 + h = b m^2, n <= x}, by n-scan.
uint64_t count_hyperbola(const HyperbolaQuery& q);

/// Divisor-pair method, valid when a*b is a perfect square.
uint64_t count_hyperbola_divisor(const HyperbolaQuery& q);

/// #{(n,m) powerful : a n + h = b m, a n <= x}.
uint64_t count_powerful_linear(uint64_t a, uint64_t b, int64_t h, uint64_t x);

/// Brahmagupta composition of solutions of x^2 - D y^2 = 1.
PellSolution pell_compose(const PellSolution& s1, const PellSolution& s2,
                          uint64_t D);

}  // namespace anatomy
