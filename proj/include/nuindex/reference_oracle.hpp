#pragma once

#include <optional>
#include <string_view>

#include "nuindex/citation_vector.hpp"

namespace nuindex {

enum class IndexName { h, g, g_star, nu, nu_bar, nu_alpha };

/// Maps "h", "g", "g_star"/"g*"/"g.star", "nu", "nu_bar"/"nu.bar",
/// "nu_alpha"/"nu.alpha" to the enum. Throws UnknownIndexNameError otherwise.
IndexName parse_index_name(std::string_view name);

/// Definition-literal evaluation of one index, used as ground truth in
/// equivalence tests. Every candidate from 1 to m + S_m + 1 is tried against
/// the defining inequality; the largest satisfying candidate wins (0 if
/// none). No first-failure stop, no floor-sqrt closed form. alpha is
/// required iff which == nu_alpha.
///
/// Deliberately naive and slow; shipped in the library so users can verify
/// the fast implementations on their own data.
Count oracle_index(const CitationVector& x, IndexName which,
                   std::optional<double> alpha = std::nullopt);

Count oracle_index(const CitationVector& x, std::string_view which,
                   std::optional<double> alpha = std::nullopt);

}  // namespace nuindex
