#include <doctest.h>

#include <algorithm>
#include <limits>

#include "nuindex/indexes.hpp"
#include "nuindex/reference_oracle.hpp"
#include "test_support.hpp"

using namespace nuindex;

namespace {
const CitationVector kNash({2000, 2000, 1500, 1000, 400, 250, 100, 100});
}

TEST_CASE("h-index examples") {
    CHECK(h_index(CitationVector({12, 3, 1})) == 2);
    CHECK(h_index(kNash) == 8);
    CHECK(h_index(CitationVector({0, 0, 0})) == 0);
    CHECK(h_index(CitationVector(std::vector<Count>{})) == 0);
}

TEST_CASE("g-index examples") {
    CHECK(g_index(CitationVector({4})) == 1);
    CHECK(g_index(CitationVector({4, 0})) == 2);
    CHECK(g_index(CitationVector({12, 3, 1})) == 3);
    CHECK(g_index(CitationVector({12, 3, 1, 0})) == 4);
    CHECK(g_index(CitationVector({0, 0})) == 0);
}

TEST_CASE("g*-index examples") {
    CHECK(g_star_index(CitationVector({5, 4})) == 3);
    CHECK(g_index(CitationVector({5, 4})) == 2);
    CHECK(g_star_index(kNash) == 85);
    CHECK(g_star_index(CitationVector({0, 0})) == 0);
    CHECK(g_star_index(CitationVector(std::vector<Count>{})) == 0);
}

TEST_CASE("nu-index examples") {
    CHECK(nu_index(CitationVector({9, 7, 1})) == 4);  // exceeds m = 3
    CHECK(nu_index(CitationVector({18, 18, 1, 1})) == 6);
    CHECK(nu_index(CitationVector({0, 0, 0})) == 0);
    CHECK(nu_index(kNash) == 85);
}

TEST_CASE("nu-bar examples") {
    CHECK(nu_bar_index(CitationVector({18, 18, 1, 1})) == 4);
    CHECK(nu_bar_index(CitationVector({20, 20, 18, 6, 1, 0})) == 6);
    CHECK(nu_bar_index(CitationVector({12, 3, 1})) == 3);
    CHECK(nu_bar_index(kNash) == 8);
}

TEST_CASE("nu-infinity closed form") {
    CHECK(nu_infinity_index(CitationVector({5, 3, 2, 1})) == 4);  // top multiplicity 1 < 5
    CHECK(nu_infinity_index(CitationVector({2, 2})) == 2);        // top multiplicity 2 >= 2
    CHECK(nu_infinity_index(CitationVector({0, 0})) == 0);
    CHECK(nu_infinity_index(CitationVector(std::vector<Count>{})) == 0);
}

TEST_CASE("nu_alpha matches nu_infinity at large alpha") {
    const CitationVector x({3, 2, 1});
    CHECK(nu_infinity_index(x) == 2);
    CHECK(nu_alpha_index(x, 64.0) == 2);
}

TEST_CASE("nu_alpha endpoints: alpha 0 is h, alpha 1 is nu") {
    testsupport::RandomVectors gen(99);
    for (int trial = 0; trial < 300; ++trial) {
        const CitationVector x(gen.next(20, 100));
        CHECK(nu_alpha_index(x, 0.0) == h_index(x));
        CHECK(nu_alpha_index(x, 1.0) == nu_index(x));
    }
}

TEST_CASE("nu_alpha on the Nash vector") {
    CHECK(nu_alpha_index(kNash, 0.5) == 35);
    CHECK(nu_alpha_index(kNash, 1.0) == 85);
}

// Expected values below were produced by brute-force evaluation of the
// defining inequality over j = 1..12 at each alpha (the reference oracle);
// the oracle cross-check keeps them honest.
TEST_CASE("nu_alpha grid on (12,3,1) is frozen and non-decreasing") {
    const CitationVector x({12, 3, 1});
    const std::vector<double> grid{0.0, 0.5, 1.0, 2.0, 4.0, 8.0};
    const std::vector<Count> expected{2, 3, 3, 5, 7, 9};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(nu_alpha_index(x, grid[i]) == expected[i]);
        CHECK(oracle_index(x, IndexName::nu_alpha, grid[i]) == expected[i]);
    }
    CHECK(std::is_sorted(expected.begin(), expected.end()));
    CHECK(expected.front() == h_index(x));
    CHECK(expected.back() <= x.top());
}

TEST_CASE("nu_alpha rejects invalid alpha") {
    const CitationVector x({3, 1});
    CHECK_THROWS_AS(nu_alpha_index(x, -0.5), InvalidAlphaError);
    CHECK_THROWS_AS(nu_alpha_index(x, std::numeric_limits<double>::infinity()), InvalidAlphaError);
    CHECK_THROWS_AS(nu_alpha_index(x, std::numeric_limits<double>::quiet_NaN()), InvalidAlphaError);
}

TEST_CASE("nu_alpha handles exponents far beyond 64-bit range") {
    // 20^200 overflows every machine word; the exact path must still decide.
    const CitationVector x({20, 20, 18, 6, 1, 0});
    CHECK(nu_alpha_index(x, 200.0) == nu_infinity_index(x));
}

TEST_CASE("full report bundles all indexes") {
    const IndexReport r = full_report(CitationVector({8, 4, 3, 2, 1}));
    CHECK(r.h == 3);
    CHECK(r.nu_bar == 3);
    CHECK(r.nu == 3);
    CHECK(r.g == 4);
    CHECK(r.g_star == 4);
    CHECK(r.m == 5);
    CHECK(r.total_citations == 18);

    const IndexReport nash = full_report(kNash);
    CHECK(nash.h == 8);
    CHECK(nash.nu_bar == 8);
    CHECK(nash.nu == 85);
    CHECK(nash.g == 8);
    CHECK(nash.g_star == 85);
}

TEST_CASE("report invariants hold on random vectors") {
    testsupport::RandomVectors gen(7);
    for (int trial = 0; trial < 500; ++trial) {
        const CitationVector x(gen.next(30, 500));
        const IndexReport r = full_report(x);
        CHECK(r.h <= r.nu);
        CHECK(r.nu <= r.g_star);
        CHECK(r.h <= r.nu_bar);
        CHECK(r.nu_bar <= r.g);
        CHECK(r.g <= r.g_star);
        CHECK(r.h <= r.m);
        CHECK(r.g <= r.m);
        CHECK(r.nu_bar == std::min(r.nu, r.m));
    }
}

TEST_CASE("prefix-sum feasibility is a contiguous prefix") {
    testsupport::RandomVectors gen(13);
    for (int trial = 0; trial < 300; ++trial) {
        const CitationVector x(gen.next(15, 60));
        const Count m = static_cast<Count>(x.m());
        bool failed = false;
        for (Count k = 1; k <= m + 30; ++k) {
            const bool ok = extended_prefix_sum(x, k) >= k * k;
            if (failed) CHECK_FALSE(ok);  // once S_k < k^2, it stays below
            if (!ok) failed = true;
        }
        // g = m exactly when S_m >= m^2
        CHECK((g_index(x) == m) == (total_citations(x) >= m * m));
    }
}

TEST_CASE("g* closed form against the constrained definition") {
    testsupport::RandomVectors gen(21);
    for (int trial = 0; trial < 300; ++trial) {
        const CitationVector x(gen.next(12, 80));
        const Count n = total_citations(x);
        const Count m = static_cast<Count>(x.m());
        if (n >= m * m) {
            CHECK(g_star_index(x) == static_cast<Count>(integer_sqrt(static_cast<std::uint64_t>(n))));
        } else {
            CHECK(g_star_index(x) == g_index(x));
        }
        CHECK(g_star_index(x) >= g_index(x));
    }
}

TEST_CASE("integer_sqrt is exact") {
    CHECK(integer_sqrt(0) == 0);
    CHECK(integer_sqrt(1) == 1);
    CHECK(integer_sqrt(3) == 1);
    CHECK(integer_sqrt(4) == 2);
    CHECK(integer_sqrt(7350) == 85);
    CHECK(integer_sqrt(7395) == 85);
    CHECK(integer_sqrt(7396) == 86);
    CHECK(integer_sqrt(UINT64_MAX) == 4294967295ull);

    // around perfect squares, where a floating sqrt goes off by one
    for (std::uint64_t r : {2ull, 10ull, 4096ull, 94906265ull, 3037000499ull, 4294967295ull}) {
        const auto square = static_cast<unsigned __int128>(r) * r;
        if (square <= UINT64_MAX) {
            const auto n = static_cast<std::uint64_t>(square);
            CHECK(integer_sqrt(n) == r);
            CHECK(integer_sqrt(n - 1) == r - 1);
            if (n < UINT64_MAX) CHECK(integer_sqrt(n + 1) == r);
        }
    }

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::uint64_t n = rng();
        const std::uint64_t r = integer_sqrt(n);
        CHECK(static_cast<unsigned __int128>(r) * r <= n);
        CHECK(static_cast<unsigned __int128>(r + 1) * (r + 1) > n);
    }
}

TEST_CASE("zero-append behavior per index") {
    // h, nu, g* are insensitive to appended zeros; g and nu_bar are not.
    const CitationVector witness_g({4});
    CHECK(g_index(witness_g) == 1);
    CHECK(g_index(CitationVector({4, 0})) == 2);

    // nu_bar jumps when nu exceeds m and a zero paper raises the cap.
    const CitationVector witness_nu_bar({18, 18, 1, 1});
    CHECK(nu_bar_index(witness_nu_bar) == 4);
    CHECK(nu_bar_index(CitationVector({18, 18, 1, 1, 0})) == 5);

    testsupport::RandomVectors gen(31);
    for (int trial = 0; trial < 300; ++trial) {
        auto raw = gen.next(12, 40);
        const CitationVector x(raw);
        raw.push_back(0);
        const CitationVector appended(raw);
        CHECK(h_index(appended) == h_index(x));
        CHECK(nu_index(appended) == nu_index(x));
        CHECK(g_star_index(appended) == g_star_index(x));
        CHECK(nu_alpha_index(appended, 2.0) == nu_alpha_index(x, 2.0));
        CHECK(nu_alpha_index(appended, 0.75) == nu_alpha_index(x, 0.75));
        CHECK(g_index(appended) >= g_index(x));
        CHECK(nu_bar_index(appended) >= nu_bar_index(x));
    }
}
