#include <doctest.h>

#include <cmath>
#include <set>

#include "nuindex/analytics.hpp"
#include "test_support.hpp"

using namespace nuindex;

namespace {

Dataset single_author_dataset() {
    Dataset d;
    d.records.push_back({"A1", {12, 3, 1}, 1});
    return d;
}

std::vector<AuthorIndexRow> rows_from(std::initializer_list<std::vector<Count>> vectors) {
    Dataset d;
    int i = 0;
    for (const auto& v : vectors) d.records.push_back({"A" + std::to_string(++i), v, 0});
    return compute_rows(d);
}

}  // namespace

TEST_CASE("compute_rows matches the full report per author") {
    const auto rows = compute_rows(single_author_dataset());
    REQUIRE(rows.size() == 1);
    const auto& row = rows[0];
    CHECK(row.h == 2);
    CHECK(row.nu == 3);
    CHECK(row.nu_bar == 3);
    CHECK(row.g == 3);
    CHECK(row.g_star == 4);
    CHECK(row.m == 3);
    CHECK(row.normalized_defined);
    CHECK(row.h_over_m == doctest::Approx(2.0 / 3.0));
    CHECK(row.g_star_over_m == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("zero-paper authors are flagged") {
    Dataset d;
    d.records.push_back({"empty", {}, 1});
    const auto rows = compute_rows(d);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].m == 0);
    CHECK(rows[0].h == 0);
    CHECK_FALSE(rows[0].normalized_defined);
    CHECK(rows[0].h_over_m == 0.0);
}

TEST_CASE("correlation: perfect h-m correlation") {
    const auto rows = rows_from({{1}, {2, 2}, {3, 3, 3}});
    const auto matrix = correlation_matrix(rows, CorrelationMethod::pearson);
    const auto label_at = [&](const std::string& name) {
        for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
            if (matrix.labels[i] == name) return i;
        }
        FAIL("missing label ", name);
        return std::size_t{0};
    };
    const std::size_t h = label_at("h");
    const std::size_t m = label_at("m");
    REQUIRE(matrix.is_defined(h, m));
    CHECK(matrix.at(h, m) == doctest::Approx(1.0));
}

TEST_CASE("correlation: zero-variance columns are flagged, not faked") {
    const auto rows = rows_from({{5, 5}, {5, 5}, {5, 5}});  // identical authors
    const auto matrix = correlation_matrix(rows, CorrelationMethod::pearson);
    for (std::size_t r = 0; r < matrix.order(); ++r) {
        for (std::size_t c = 0; c < matrix.order(); ++c) {
            CHECK_FALSE(matrix.is_defined(r, c));
            CHECK(std::isnan(matrix.at(r, c)));
        }
    }
}

TEST_CASE("correlation: insufficient data") {
    CHECK_THROWS_AS(correlation_matrix(rows_from({{3, 2}}), CorrelationMethod::pearson),
                    InsufficientDataError);

    // m = 0 rows do not count toward the minimum
    const auto rows = rows_from({{3, 2}, {}});
    CHECK_THROWS_AS(correlation_matrix(rows, CorrelationMethod::pearson), InsufficientDataError);
}

TEST_CASE("batch rows respect the index ordering chain") {
    testsupport::RandomVectors gen(808);
    Dataset d;
    for (int i = 0; i < 80; ++i) d.records.push_back({"C" + std::to_string(i), gen.next(15, 150), 0});
    for (const auto& row : compute_rows(d)) {
        CHECK(row.h <= row.nu);
        CHECK(row.nu <= row.g_star);
        CHECK(row.h <= row.nu_bar);
        CHECK(row.nu_bar <= row.g);
        CHECK(row.g <= row.g_star);
        if (row.normalized_defined) {
            // the normalized triplets plotted per author stay vertically ordered
            CHECK(row.h_over_m <= row.nu_over_m);
            CHECK(row.nu_over_m <= row.g_star_over_m);
            CHECK(row.h_over_m <= row.nu_bar_over_m);
            CHECK(row.nu_bar_over_m <= row.g_over_m);
        }
    }
}

TEST_CASE("correlation matrix invariants on random rows") {
    testsupport::RandomVectors gen(97);
    Dataset d;
    for (int i = 0; i < 60; ++i) d.records.push_back({"R" + std::to_string(i), gen.next(20, 200), 0});
    const auto rows = compute_rows(d);

    for (auto method : {CorrelationMethod::pearson, CorrelationMethod::spearman}) {
        const auto matrix = correlation_matrix(rows, method);
        REQUIRE(matrix.order() == 6);
        for (std::size_t r = 0; r < 6; ++r) {
            for (std::size_t c = 0; c < 6; ++c) {
                if (!matrix.is_defined(r, c)) continue;
                CHECK(matrix.at(r, c) == doctest::Approx(matrix.at(c, r)).epsilon(1e-12));
                CHECK(matrix.at(r, c) >= -1.0);
                CHECK(matrix.at(r, c) <= 1.0);
            }
            if (matrix.is_defined(r, r)) CHECK(matrix.at(r, r) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("spearman is invariant under strictly monotone column transforms") {
    Dataset base;
    testsupport::RandomVectors gen(123);
    for (int i = 0; i < 25; ++i) {
        auto v = gen.next(10, 12);
        if (v.empty()) v.push_back(1);  // keep every row usable: m -> 2m+1 must not un-exclude any
        base.records.push_back({"B" + std::to_string(i), v, 0});
    }
    const auto rows = compute_rows(base);

    auto transformed = rows;
    for (auto& row : transformed) {
        row.h = row.h * row.h * row.h;
        row.nu = 5 * row.nu + 7;
        row.g = row.g * row.g;
        row.m = 2 * row.m + 1;
    }

    const auto a = correlation_matrix(rows, CorrelationMethod::spearman);
    const auto b = correlation_matrix(transformed, CorrelationMethod::spearman);
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        CHECK(a.defined[i] == b.defined[i]);
        if (a.defined[i]) CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-12));
    }
}

TEST_CASE("alpha_curve samples the family") {
    CHECK(alpha_curve(CitationVector({12, 3, 1}), {0.0, 1.0}).values ==
          std::vector<Count>{2, 3});

    const auto zero = alpha_curve(CitationVector({0, 0}), {0.0, 0.5, 1.0});
    CHECK(zero.values == std::vector<Count>{0, 0, 0});
    CHECK(zero.nu_infinity == 0);

    const CitationVector nash({2000, 2000, 1500, 1000, 400, 250, 100, 100});
    const auto curve = alpha_curve(nash, {0.0, 0.5, 1.0});
    CHECK(curve.values == std::vector<Count>{8, 35, 85});
    CHECK(curve.nu_infinity == 1999);  // top citation 2000 with multiplicity 2 < 2000
}

TEST_CASE("alpha_curve validates the grid") {
    const CitationVector x({3, 1});
    CHECK_THROWS_AS(alpha_curve(x, {0.0, -1.0}), InvalidAlphaError);
    CHECK_THROWS_AS(alpha_curve(x, {1.0, 0.5}), InvalidAlphaError);
}

TEST_CASE("alpha_curve is non-decreasing on random vectors") {
    testsupport::RandomVectors gen(555);
    const std::vector<double> grid{0.0, 0.25, 0.5, 1.0, 1.75, 2.0, 3.5, 6.0};
    for (int trial = 0; trial < 100; ++trial) {
        const CitationVector x(gen.next(10, 40));
        const auto curve = alpha_curve(x, grid);
        for (std::size_t i = 1; i < curve.values.size(); ++i) {
            CHECK(curve.values[i] >= curve.values[i - 1]);
        }
        CHECK(curve.values.back() <= std::max<Count>(x.top(), 0));
    }
}

TEST_CASE("rank_rows sorts by h/m with id tie-break and permutes") {
    std::vector<AuthorIndexRow> rows(3);
    rows[0].author_id = "c";
    rows[0].h_over_m = 0.5;
    rows[1].author_id = "b";
    rows[1].h_over_m = 0.2;
    rows[2].author_id = "a";
    rows[2].h_over_m = 0.2;
    const auto ranked = rank_rows(rows);
    REQUIRE(ranked.size() == 3);
    CHECK(ranked[0].author_id == "a");
    CHECK(ranked[1].author_id == "b");
    CHECK(ranked[2].author_id == "c");

    CHECK(rank_rows({}).empty());

    testsupport::RandomVectors gen(31337);
    Dataset d;
    for (int i = 0; i < 50; ++i) d.records.push_back({"P" + std::to_string(i), gen.next(8, 20), 0});
    const auto computed = compute_rows(d);
    const auto sorted = rank_rows(computed);
    std::multiset<std::string> before;
    std::multiset<std::string> after;
    for (const auto& row : computed) before.insert(row.author_id);
    for (const auto& row : sorted) after.insert(row.author_id);
    CHECK(before == after);
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        CHECK(sorted[i - 1].h_over_m <= sorted[i].h_over_m);
    }
}
