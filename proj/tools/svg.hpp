#pragma once

#include <string>
#include <vector>

#include "nuindex/analytics.hpp"
#include "nuindex/indexes.hpp"

namespace nuindex::cli {

/// Step-function polyline of (alpha, nu_alpha) samples with a dashed
/// horizontal marker at nu_infinity. Fixed 800x500 viewBox, no timestamps,
/// no external assets.
std::string svg_alpha_curve(const AlphaCurve& curve, const std::string& title);

/// Two stacked 800x500 panels of normalized index triplets, one x-position
/// per author in ranked order: (h/m, nu/m, g*/m) on top, (h/m, nu.bar/m,
/// g/m) below. Emits a placeholder when rows is empty.
std::string svg_ranking(const std::vector<AuthorIndexRow>& ranked);

}  // namespace nuindex::cli
