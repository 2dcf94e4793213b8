#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "anatomy/enumerate.hpp"
#include "anatomy/factorial_square.hpp"

using namespace anatomy;
using boost::multiprecision::cpp_int;

namespace {

cpp_int factorial(uint64_t n) {
    cpp_int f = 1;
    for (uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

bool is_square_big(const cpp_int& n) {
    cpp_int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

bool contains(const std::vector<FactorialSquareSolution>& v, uint64_t a1,
              uint64_t a2, uint64_t a3) {
    for (auto& s : v)
        if (s.a1 == a1 && s.a2 == a2 && s.a3 == a3) return true;
    return false;
}

}  // namespace

TEST_CASE("known solutions") {
    auto v = enumerate_solutions(60);
    CHECK(contains(v, 6, 7, 10));
    CHECK(contains(v, 3, 47, 50));
    CHECK(contains(v, 4, 47, 50));
    CHECK(contains(v, 1, 3, 4));   // 1! 3! 4! = 144
    CHECK(contains(v, 1, 8, 9));   // (8!)^2 * 9
}

TEST_CASE("big-integer oracle up to 60") {
    auto v = enumerate_solutions(60);
    std::vector<FactorialSquareSolution> brute;
    std::vector<cpp_int> fact(61);
    fact[0] = 1;
    for (uint64_t i = 1; i <= 60; ++i) fact[i] = fact[i - 1] * i;
    for (uint64_t a1 = 1; a1 <= 58; ++a1)
        for (uint64_t a2 = a1 + 1; a2 <= 59; ++a2)
            for (uint64_t a3 = a2 + 1; a3 <= 60; ++a3)
                if (is_square_big(fact[a1] * fact[a2] * fact[a3]))
                    brute.push_back({a1, a2, a3});
    auto key = [](const FactorialSquareSolution& s) {
        return std::tuple(s.a3, s.a2, s.a1);
    };
    std::sort(brute.begin(), brute.end(),
              [&](auto& p, auto& q) { return key(p) < key(q); });
    REQUIRE(v.size() == brute.size());
    for (size_t i = 0; i < v.size(); ++i) {
        CHECK(v[i].a1 == brute[i].a1);
        CHECK(v[i].a2 == brute[i].a2);
        CHECK(v[i].a3 == brute[i].a3);
    }
}

TEST_CASE("every solution is a square and replays as an interval witness") {
    FactorialKernelTable t = build_factorial_kernels(500);
    for (auto& s : enumerate_solutions(120)) {
        if (s.a3 <= 30)
            CHECK(is_square_big(factorial(s.a1) * factorial(s.a2) *
                                factorial(s.a3)));
        auto ws = f3_witnesses(interval_product(s.a2, s.a3 - s.a2), t,
                               std::min<uint64_t>(500, s.a2 - 1));
        bool ok = false;
        for (auto& w : ws) ok |= (w.a == s.a1);
        CHECK(ok);
    }
}

TEST_CASE("square family from f31") {
    // n in F3^1 with witness a gives the solution (a, n-1, n)
    auto v = enumerate_solutions(200, 1);
    for (uint64_t n : enumerate_f31(200)) {
        bool found = false;
        for (auto& s : v) found |= (s.a3 == n && s.a2 == n - 1);
        CHECK(found);
    }
}

TEST_CASE("at most two witnesses per endpoint pair") {
    auto v = enumerate_solutions(300);
    std::map<std::pair<uint64_t, uint64_t>, int> per_pair;
    for (auto& s : v) ++per_pair[{s.a2, s.a3}];
    for (auto& [k, c] : per_pair) CHECK(c <= 2);
}

TEST_CASE("solution_count_table") {
    auto rows = solution_count_table(1000, 100);
    REQUIRE(rows.size() == 10);
    uint64_t prev = 0;
    for (auto& r : rows) {
        CHECK(r.count >= prev);
        CHECK(r.count_h1 <= r.count);
        CHECK(r.ratio_sqrt ==
              doctest::Approx(r.count / std::sqrt(double(r.t))));
        prev = r.count;
    }
    CHECK(rows[0].t == 100);
    auto small = enumerate_solutions(10);
    CHECK(small.size() >= 3);  // at least (1,3,4), (1,8,9), (6,7,10)
    CHECK(contains(small, 1, 3, 4));
    CHECK(contains(small, 1, 8, 9));
    CHECK(contains(small, 6, 7, 10));
}
