#pragma once

#include "momentset/rational.hpp"

#include <span>
#include <vector>

namespace momentset {

/// Exact positive-semidefiniteness report for the Hankel matrix
/// H[i][j] = mu_{i+j}, 0 <= i, j <= order.
struct HankelReport {
    std::vector<Rational> leading_minors; // determinants of the 1x1 .. (order+1)x(order+1) blocks
    bool psd = false;
};

/// Builds the Hankel matrix of a moment sequence and decides positive
/// semidefiniteness exactly. Leading principal minors are computed by
/// rational Gaussian elimination; the PSD verdict uses symmetric elimination
/// with pivot-sign analysis (a zero pivot forces its whole row to vanish),
/// so it is correct even when minors vanish.
/// Requires at least 2 * order + 1 moments.
HankelReport hankel_psd(std::span<const Rational> moments, std::size_t order);

} // namespace momentset
