#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "anatomy/interval.hpp"

using namespace anatomy;

namespace {

std::map<uint64_t, uint64_t> merged_of(uint64_t N, uint64_t H) {
    return interval_product(N, H).merged();
}

// Legendre exponent of p in a!
uint64_t legendre(uint64_t a, uint64_t p) {
    uint64_t e = 0;
    for (uint64_t q = p; q <= a; q *= p) {
        e += a / q;
        if (q > a / p) break;
    }
    return e;
}

}  // namespace

TEST_CASE("interval_product merged factorizations") {
    CHECK(merged_of(23, 2) ==
          std::map<uint64_t, uint64_t>{{2, 3}, {3, 1}, {5, 2}});
    CHECK(merged_of(1680, 3) ==
          std::map<uint64_t, uint64_t>{
              {2, 1}, {3, 2}, {11, 1}, {17, 1}, {29, 2}, {41, 2}});
    // 5! = 120
    CHECK(merged_of(0, 5) ==
          std::map<uint64_t, uint64_t>{{2, 3}, {3, 1}, {5, 1}});
}

TEST_CASE("incremental extension matches rebuild") {
    IntervalProduct ip(100, 1);
    for (uint64_t H = 2; H <= 30; ++H) {
        ip.extend();
        IntervalProduct fresh(100, H);
        CHECK(ip.merged() == fresh.merged());
        CHECK(ip.kernel() == fresh.kernel());
        CHECK(ip.kernel_hash() == fresh.kernel_hash());
    }
}

TEST_CASE("is_bad") {
    CHECK(is_bad(interval_product(23, 2)));
    CHECK_FALSE(is_bad(interval_product(23, 1)));
    // {p^2-1, p^2} is bad for odd primes p
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 97ull})
        CHECK(is_bad(interval_product(p * p - 2, 2)));
    CHECK_FALSE(is_bad(interval_product(0, 1)));  // product 1
}

TEST_CASE("is_very_bad") {
    CHECK(is_very_bad(interval_product(7, 2)));
    CHECK_FALSE(is_very_bad(interval_product(23, 2)));
    CHECK(is_very_bad(interval_product(8, 1)));
    CHECK(is_very_bad(interval_product(0, 1)));  // empty product
}

TEST_CASE("very bad implies bad") {
    for (uint64_t N = 0; N < 2000; ++N)
        for (uint64_t H = 1; H <= 4; ++H) {
            IntervalProduct ip(N, H);
            if (ip.merged().empty()) continue;
            if (is_very_bad(ip)) CHECK(is_bad(ip));
        }
}

TEST_CASE("factorial kernel table sequence") {
    FactorialKernelTable t = build_factorial_kernels(20);
    std::vector<uint64_t> expected{1, 2, 6, 6, 30, 5, 35, 70, 70, 7, 77, 231,
                                   3003};
    for (uint64_t a = 1; a <= 13; ++a) {
        uint64_t prod = 1;
        for (uint64_t p : t.kernel(a).primes) prod *= p;
        CHECK(prod == expected[a - 1]);
    }
    // repeats exactly at the squares
    for (uint64_t a = 2; a <= 20; ++a) {
        bool square = isqrt(a) * isqrt(a) == a;
        CHECK((t.kernel(a) == t.kernel(a - 1)) == square);
    }
}

TEST_CASE("kernels match Legendre-parity oracle up to 1000") {
    FactorialKernelTable t = build_factorial_kernels(1000);
    auto primes = primes_up_to(1000);
    for (uint64_t a : {2ull, 17ull, 100ull, 576ull, 999ull, 1000ull}) {
        ParitySet expect;
        for (uint64_t p : primes) {
            if (p > a) break;
            if (legendre(a, p) & 1) expect.primes.push_back(p);
        }
        CHECK(t.kernel(a) == expect);
    }
}

TEST_CASE("f3 witnesses") {
    FactorialKernelTable t = build_factorial_kernels(200);

    auto has = [](const std::vector<F3Witness>& ws, uint64_t a) {
        for (auto& w : ws)
            if (w.a == a) return true;
        return false;
    };

    auto w1 = f3_witnesses(interval_product(7, 3), t, 100);
    CHECK(has(w1, 6));  // kernel {5} = kernel of 6!

    auto w2 = f3_witnesses(interval_product(47, 3), t, 100);
    CHECK(has(w2, 3));
    CHECK(has(w2, 4));

    auto w3 = f3_witnesses(interval_product(3, 1), t, 100);
    CHECK(has(w3, 1));  // s(4) = 1 = s(1!)

    CHECK_THROWS_AS(f3_witnesses(interval_product(7, 3), t, 500),
                    std::invalid_argument);
}

TEST_CASE("witnesses respect the abound-style cap") {
    // every witness found in a scan satisfies a <= 4 H log(N+H)
    FactorialKernelTable t = build_factorial_kernels(1000);
    for (uint64_t N = 2; N <= 300; ++N)
        for (uint64_t H = 2; H <= 6; ++H) {
            IntervalProduct ip(N, H);
            auto full = f3_witnesses(ip, t, std::min<uint64_t>(1000, N - 1));
            for (auto& w : full) CHECK(w.a <= default_a_cap(N, H));
        }
}

TEST_CASE("sylvester-schur spot check") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        uint64_t H = 1 + rng() % 30;
        uint64_t N = H + 1 + rng() % 100000;
        CHECK(interval_product(N, H).largest().first > H);
    }
}
