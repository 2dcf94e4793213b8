#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "anatomy/core_arith.hpp"

using namespace anatomy;

namespace {

// independent trial-division oracle
std::vector<std::pair<uint64_t, uint32_t>> trial_factor(uint64_t n) {
    std::vector<std::pair<uint64_t, uint32_t>> out;
    for (uint64_t p = 2; p * p <= n; ++p) {
        uint32_t e = 0;
        while (n % p == 0) n /= p, ++e;
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

uint64_t reconstruct(const Factorization& f) {
    uint64_t v = 1;
    for (auto& [p, e] : f.factors)
        for (uint32_t i = 0; i < e; ++i) v *= p;
    return v;
}

}  // namespace

TEST_CASE("build_spf basics") {
    SpfTable t = build_spf(100);
    CHECK(t.spf(9) == 3);
    CHECK(t.spf(7) == 7);
    CHECK(t.spf(91) == 7);  // 91 = 7 * 13
    for (uint64_t n = 2; n <= 100; ++n) {
        CHECK(n % t.spf(n) == 0);
        CHECK(t.spf(n) == trial_factor(n).front().first);
    }
    CHECK_THROWS_AS(build_spf(1), std::domain_error);
}

TEST_CASE("factorize known values") {
    auto f = factorize(720);
    CHECK(f.factors ==
          std::vector<std::pair<uint64_t, uint32_t>>{{2, 4}, {3, 2}, {5, 1}});
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1683).factors ==
          std::vector<std::pair<uint64_t, uint32_t>>{{3, 2}, {11, 1}, {17, 1}});
    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize round-trips up to 1e5") {
    SpfTable t = build_spf(100000);
    for (uint64_t n = 2; n <= 100000; ++n) {
        CHECK(reconstruct(factorize(n, t)) == n);
    }
}

TEST_CASE("factorize_interval") {
    auto v = factorize_interval(1680, 3, 42);
    REQUIRE(v.size() == 3);
    CHECK(v[0].factors ==
          std::vector<std::pair<uint64_t, uint32_t>>{{41, 2}});
    CHECK(v[1].factors ==
          std::vector<std::pair<uint64_t, uint32_t>>{{2, 1}, {29, 2}});
    CHECK(v[2].factors ==
          std::vector<std::pair<uint64_t, uint32_t>>{{3, 2}, {11, 1}, {17, 1}});

    auto one = factorize_interval(0, 1, 2);
    REQUIRE(one.size() == 1);
    CHECK(one[0].factors.empty());

    auto w = factorize_interval(23, 2, 5);
    CHECK(w[0].factors ==
          std::vector<std::pair<uint64_t, uint32_t>>{{2, 3}, {3, 1}});
    CHECK(w[1].factors == std::vector<std::pair<uint64_t, uint32_t>>{{5, 2}});

    CHECK_THROWS_AS(factorize_interval(100, 5, 3), std::invalid_argument);
}

TEST_CASE("factorize_interval agrees with point factorization on random windows") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        uint64_t N = rng() % 1000000;
        uint64_t H = 1 + rng() % 50;
        auto v = factorize_interval(N, H, isqrt(N + H) + 1);
        for (uint64_t i = 0; i < H; ++i)
            CHECK(v[i] == factorize(N + 1 + i));
    }
}

TEST_CASE("largest_prime_factor") {
    CHECK(largest_prime_factor(factorize(600)) ==
          std::pair<uint64_t, uint32_t>{5, 2});
    CHECK(largest_prime_factor(factorize(7)) ==
          std::pair<uint64_t, uint32_t>{7, 1});
    CHECK(largest_prime_factor(factorize(1682)) ==
          std::pair<uint64_t, uint32_t>{29, 2});
    CHECK_THROWS_AS(largest_prime_factor(factorize(1)), std::domain_error);
}

TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(factorize(720)).primes == std::vector<uint64_t>{5});
    CHECK(squarefree_part(factorize(36)).primes.empty());
    CHECK(squarefree_part(factorize(120)).primes ==
          std::vector<uint64_t>{2, 3, 5});
}

TEST_CASE("kernel is multiplicative under symmetric difference") {
    for (uint64_t m = 1; m <= 300; m += 7)
        for (uint64_t n = 1; n <= 300; n += 11) {
            ParitySet sm = squarefree_part(factorize(m));
            ParitySet sn = squarefree_part(factorize(n));
            CHECK(sm.sym_diff(sn) == squarefree_part(factorize(m * n)));
        }
}

TEST_CASE("is_powerful") {
    CHECK(is_powerful(factorize(72)));
    CHECK(is_powerful(factorize(12167)));  // 23^3
    CHECK_FALSE(is_powerful(factorize(12)));
    CHECK(is_powerful(factorize(1)));

    // brute-force cross-check: p | n implies p^2 | n
    for (uint64_t n = 1; n <= 100000; ++n) {
        bool expect = true;
        for (auto& [p, e] : trial_factor(n))
            if (e < 2) { expect = false; break; }
        CHECK(is_powerful(n) == expect);
    }
}

TEST_CASE("is_smooth") {
    CHECK(is_smooth(factorize(96), 3));
    CHECK_FALSE(is_smooth(factorize(7), 5));
    CHECK(is_smooth(factorize(1), 1));
}

TEST_CASE("isqrt exact") {
    for (uint64_t n = 0; n <= 10000; ++n) {
        uint64_t r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
    CHECK(isqrt(UINT64_MAX) == 4294967295ULL);
}
