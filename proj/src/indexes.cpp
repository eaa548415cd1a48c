#include "nuindex/indexes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace nuindex {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(BigInt base, std::uint64_t exp) {
    BigInt result = 1;
    while (exp != 0) {
        if (exp & 1u) result *= base;
        exp >>= 1u;
        if (exp != 0) base *= base;
    }
    return result;
}

// Exact evaluation of the integer-alpha condition
//   sum_{x_i >= j} x_i^a >= j^(a+1)
// scanning j upward with first-failure stop. Two exact branches keep the
// big-integer work bounded:
//  - no entry exceeds j: every term is j^a, so the condition is q >= j
//    where q counts the qualifying entries;
//  - some entry exceeds j and a >= j*(j-1): that term alone is at least
//    ((j+1)/j)^a >= 1 + a/j >= j by Bernoulli's inequality.
Count nu_alpha_integral(const CitationVector& x, std::uint64_t a) {
    const auto& c = x.counts();
    std::vector<BigInt> pow_cache(c.size());
    std::vector<bool> cached(c.size(), false);

    std::size_t q = c.size();  // entries >= j; shrinks as j grows
    Count result = 0;
    for (Count j = 1; j <= x.top(); ++j) {
        while (q > 0 && c[q - 1] < j) --q;
        if (q == 0) break;

        std::size_t q_greater = q;  // entries > j
        while (q_greater > 0 && c[q_greater - 1] == j) --q_greater;

        bool holds;
        if (q_greater == 0) {
            holds = static_cast<Count>(q) >= j;
        } else if (static_cast<unsigned __int128>(a) >=
                   static_cast<unsigned __int128>(j) * static_cast<unsigned __int128>(j - 1)) {
            holds = true;
        } else {
            const BigInt rhs = big_pow(BigInt(j), a + 1);
            BigInt lhs = 0;
            for (std::size_t i = 0; i < q; ++i) {
                if (!cached[i]) {
                    pow_cache[i] = big_pow(BigInt(c[i]), a);
                    cached[i] = true;
                }
                lhs += pow_cache[i];
                if (lhs >= rhs) break;
            }
            holds = lhs >= rhs;
        }

        if (!holds) break;
        result = j;
    }
    return result;
}

// Double-precision evaluation of the normalized condition
//   sum_{x_i >= j} (x_i/j)^alpha >= j
// with strict >= and no epsilon. A single term already larger than j (in
// log space) decides the condition without accumulating.
Count nu_alpha_fractional(const CitationVector& x, double alpha) {
    const auto& c = x.counts();
    std::size_t q = c.size();
    Count result = 0;
    for (Count j = 1; j <= x.top(); ++j) {
        while (q > 0 && c[q - 1] < j) --q;
        if (q == 0) break;

        const double log_j = std::log(static_cast<double>(j));
        double sum = 0.0;
        bool holds = false;
        for (std::size_t i = 0; i < q; ++i) {
            const double ratio = static_cast<double>(c[i]) / static_cast<double>(j);
            if (ratio > 1.0 && alpha * std::log(ratio) > log_j) {
                holds = true;
                break;
            }
            sum += std::pow(ratio, alpha);
        }
        if (!holds) holds = sum >= static_cast<double>(j);

        if (!holds) break;
        result = j;
    }
    return result;
}

}  // namespace

Count h_index(const CitationVector& x) {
    const auto& c = x.counts();
    // On descending counts, m_*(j) >= j is equivalent to x_j >= j.
    Count h = 0;
    while (h < static_cast<Count>(c.size()) && c[static_cast<std::size_t>(h)] >= h + 1) ++h;
    return h;
}

Count g_index(const CitationVector& x) {
    const auto& c = x.counts();
    Count g = 0;
    Count s = 0;
    for (Count k = 1; k <= static_cast<Count>(c.size()); ++k) {
        s += c[static_cast<std::size_t>(k - 1)];
        if (s < k * k) break;  // S_k < k^2 stays violated for all larger k
        g = k;
    }
    return g;
}

Count g_star_index(const CitationVector& x) {
    const Count m = static_cast<Count>(x.m());
    const Count n = total_citations(x);
    if (static_cast<unsigned __int128>(n) >=
        static_cast<unsigned __int128>(m) * static_cast<unsigned __int128>(m)) {
        return static_cast<Count>(integer_sqrt(static_cast<std::uint64_t>(n)));
    }
    return g_index(x);
}

Count nu_index(const CitationVector& x) {
    const auto& c = x.counts();
    if (x.top() == 0) return 0;

    Count sum = total_citations(x);
    std::size_t q = c.size();  // entries >= j; their sum is S_{m_*(j)}
    // Any feasible j satisfies j^2 <= S_m and j <= x_1.
    const Count j_max = std::min(x.top(), static_cast<Count>(integer_sqrt(static_cast<std::uint64_t>(sum))));

    Count nu = 0;
    for (Count j = 1; j <= j_max; ++j) {
        while (q > 0 && c[q - 1] < j) {
            sum -= c[q - 1];
            --q;
        }
        if (q == 0 || sum < j * j) break;
        nu = j;
    }
    return nu;
}

Count nu_bar_index(const CitationVector& x) {
    // The feasible set of the capped maximum is a prefix of 1..m, so the cap
    // commutes with the maximum.
    return std::min(nu_index(x), static_cast<Count>(x.m()));
}

Count nu_alpha_index(const CitationVector& x, double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw InvalidAlphaError("alpha must be finite and >= 0, got " + std::to_string(alpha));
    }
    if (x.top() == 0) return 0;

    // Doubles hold every integer exactly up to 2^53.
    constexpr double max_exact_integer = 9007199254740992.0;
    if (alpha == std::floor(alpha) && alpha <= max_exact_integer) {
        return nu_alpha_integral(x, static_cast<std::uint64_t>(alpha));
    }
    return nu_alpha_fractional(x, alpha);
}

Count nu_infinity_index(const CitationVector& x) {
    const Count x1 = x.top();
    if (x1 == 0) return 0;
    const Count multiplicity = static_cast<Count>(m_star(x, x1));
    return multiplicity < x1 ? x1 - 1 : x1;
}

IndexReport full_report(const CitationVector& x) {
    IndexReport report;
    report.h = h_index(x);
    report.g = g_index(x);
    report.g_star = g_star_index(x);
    report.nu = nu_index(x);
    report.nu_bar = nu_bar_index(x);
    report.m = static_cast<Count>(x.m());
    report.total_citations = total_citations(x);
    return report;
}

std::uint64_t integer_sqrt(std::uint64_t n) {
    if (n == 0) return 0;
    // Floating seed, then exact integer correction; squares are widened to
    // 128 bits so the corrections cannot overflow near 2^64.
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace nuindex
