#include "momentset/hankel.hpp"

#include <stdexcept>
#include <utility>

namespace momentset {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero())
                continue;
            Rational factor = m[row][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[row][c] -= factor * m[col][c];
        }
    }
    return det;
}

// Symmetric elimination PSD test: a negative pivot refutes PSD; a zero pivot
// is admissible only if its entire remaining row vanishes.
bool psd_by_elimination(Matrix m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& d = m[i][i];
        if (d.is_negative())
            return false;
        if (d.is_zero()) {
            for (std::size_t j = i + 1; j < n; ++j)
                if (!m[i][j].is_zero())
                    return false;
            continue;
        }
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m[r][i].is_zero())
                continue;
            Rational factor = m[r][i] / d;
            for (std::size_t c = i; c < n; ++c)
                m[r][c] -= factor * m[i][c];
        }
    }
    return true;
}

} // namespace

HankelReport hankel_psd(std::span<const Rational> moments, std::size_t order) {
    const std::size_t n = order + 1;
    if (moments.size() < 2 * order + 1)
        throw std::invalid_argument("hankel_psd needs at least 2 * order + 1 moments");

    Matrix h(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h[i][j] = moments[i + j];

    HankelReport report;
    report.leading_minors.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix block(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                block[i][j] = h[i][j];
        report.leading_minors.push_back(determinant(std::move(block)));
    }
    report.psd = psd_by_elimination(std::move(h));
    return report;
}

} // namespace momentset
