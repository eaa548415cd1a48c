#include "nuindex/reference_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nuindex {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using u128 = unsigned __int128;

// Candidate bound from the enumeration contract: every index value is
// <= max(m, sqrt(S_m), x_1) < m + S_m + 1, so scanning that far is safe
// without tuning.
Count candidate_bound(Count m, Count n) { return m + n + 1; }

// sum_{i} 1{x_i >= j} on descending counts: the indicator selects a prefix,
// the remaining terms are zero.
Count count_at_least(const std::vector<Count>& c, Count j) {
    Count k = 0;
    for (Count v : c) {
        if (v < j) break;
        ++k;
    }
    return k;
}

// sum_{i} x_i * 1{x_i >= j}, same prefix argument.
Count sum_at_least(const std::vector<Count>& c, Count j) {
    Count s = 0;
    for (Count v : c) {
        if (v < j) break;
        s += v;
    }
    return s;
}

u128 pow_u128(u128 base, std::uint64_t exp) {
    u128 r = 1;
    while (exp != 0) {
        if (exp & 1u) r *= base;
        exp >>= 1u;
        if (exp != 0) base *= base;
    }
    return r;
}

BigInt pow_big(BigInt base, std::uint64_t exp) {
    BigInt r = 1;
    while (exp != 0) {
        if (exp & 1u) r *= base;
        exp >>= 1u;
        if (exp != 0) base *= base;
    }
    return r;
}

// Integer alpha: exact arithmetic. The 128-bit path is taken when both
// sides and the accumulated sum provably fit; otherwise arbitrary
// precision.
Count oracle_nu_alpha_integral(const std::vector<Count>& c, std::uint64_t a, Count bound) {
    const Count x1 = c.empty() ? 0 : c.front();
    const double bits_lhs = static_cast<double>(a) * std::log2(static_cast<double>(std::max<Count>(x1, 2))) +
                            std::log2(static_cast<double>(c.size() + 1));
    const double bits_rhs =
        static_cast<double>(a + 1) * std::log2(static_cast<double>(std::max<Count>(bound, 2)));

    Count best = 0;
    if (bits_lhs < 120.0 && bits_rhs < 120.0) {
        std::vector<u128> powers(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) powers[i] = pow_u128(static_cast<u128>(c[i]), a);
        for (Count j = 1; j <= bound; ++j) {
            const u128 rhs = pow_u128(static_cast<u128>(j), a + 1);
            u128 lhs = 0;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] < j) break;
                lhs += powers[i];
            }
            if (lhs >= rhs) best = j;
        }
    } else {
        std::vector<BigInt> powers(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) powers[i] = pow_big(BigInt(c[i]), a);
        for (Count j = 1; j <= bound; ++j) {
            const BigInt rhs = pow_big(BigInt(j), a + 1);
            BigInt lhs = 0;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] < j) break;
                lhs += powers[i];
            }
            if (lhs >= rhs) best = j;
        }
    }
    return best;
}

// Fractional alpha: the same double-precision rule as the fast path, in the
// normalized form sum (x_i/j)^alpha >= j, but with full candidate
// enumeration.
Count oracle_nu_alpha_fractional(const std::vector<Count>& c, double alpha, Count bound) {
    Count best = 0;
    for (Count j = 1; j <= bound; ++j) {
        double sum = 0.0;
        for (Count v : c) {
            if (v < j) break;
            sum += std::pow(static_cast<double>(v) / static_cast<double>(j), alpha);
        }
        if (sum >= static_cast<double>(j)) best = j;
    }
    return best;
}

}  // namespace

IndexName parse_index_name(std::string_view name) {
    if (name == "h") return IndexName::h;
    if (name == "g") return IndexName::g;
    if (name == "g_star" || name == "g*" || name == "g.star") return IndexName::g_star;
    if (name == "nu") return IndexName::nu;
    if (name == "nu_bar" || name == "nu.bar") return IndexName::nu_bar;
    if (name == "nu_alpha" || name == "nu.alpha") return IndexName::nu_alpha;
    throw UnknownIndexNameError("unknown index name '" + std::string(name) + "'");
}

Count oracle_index(const CitationVector& x, IndexName which, std::optional<double> alpha) {
    const auto& c = x.counts();
    const Count m = static_cast<Count>(c.size());
    Count n = 0;
    for (Count v : c) n += v;
    const Count bound = candidate_bound(m, n);

    Count best = 0;
    switch (which) {
        case IndexName::h:
            for (Count j = 1; j <= bound; ++j) {
                if (count_at_least(c, j) >= j) best = j;
            }
            break;
        case IndexName::g: {
            Count s = 0;
            for (Count k = 1; k <= m; ++k) {
                s += c[static_cast<std::size_t>(k - 1)];
                if (static_cast<u128>(s) >= static_cast<u128>(k) * static_cast<u128>(k)) best = k;
            }
            break;
        }
        case IndexName::g_star: {
            std::vector<Count> sums(static_cast<std::size_t>(m) + 1, 0);
            for (Count k = 1; k <= m; ++k) {
                sums[static_cast<std::size_t>(k)] =
                    sums[static_cast<std::size_t>(k - 1)] + c[static_cast<std::size_t>(k - 1)];
            }
            for (Count k = 1; k <= bound; ++k) {
                const Count s_k = sums[static_cast<std::size_t>(std::min(k, m))];
                if (static_cast<u128>(s_k) >= static_cast<u128>(k) * static_cast<u128>(k)) best = k;
            }
            break;
        }
        case IndexName::nu:
            for (Count j = 1; j <= bound; ++j) {
                const Count s = sum_at_least(c, j);
                if (static_cast<u128>(s) >= static_cast<u128>(j) * static_cast<u128>(j)) best = j;
            }
            break;
        case IndexName::nu_bar:
            for (Count j = 1; j <= std::min(m, bound); ++j) {
                const Count s = sum_at_least(c, j);
                if (static_cast<u128>(s) >= static_cast<u128>(j) * static_cast<u128>(j)) best = j;
            }
            break;
        case IndexName::nu_alpha: {
            if (!alpha.has_value() || !std::isfinite(*alpha) || *alpha < 0.0) {
                throw InvalidAlphaError("nu_alpha requires a finite alpha >= 0");
            }
            constexpr double max_exact_integer = 9007199254740992.0;
            if (*alpha == std::floor(*alpha) && *alpha <= max_exact_integer) {
                best = oracle_nu_alpha_integral(c, static_cast<std::uint64_t>(*alpha), bound);
            } else {
                best = oracle_nu_alpha_fractional(c, *alpha, bound);
            }
            break;
        }
    }
    return best;
}

Count oracle_index(const CitationVector& x, std::string_view which, std::optional<double> alpha) {
    return oracle_index(x, parse_index_name(which), alpha);
}

}  // namespace nuindex
