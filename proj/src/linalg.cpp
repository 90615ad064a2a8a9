#include "sfm/linalg.hpp"

#include <stdexcept>

namespace sfm {

namespace {

// Reduces m (with an optional augmented column) in place; returns pivot columns.
std::vector<std::size_t> reduce(RatMatrix& m, std::vector<Rational>* rhs, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < ncols; ++j) m[r][j] *= inv;
        if (rhs) (*rhs)[r] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
            if (rhs) (*rhs)[i] -= f * (*rhs)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(RatMatrix m) {
    if (m.empty()) return 0;
    return reduce(m, nullptr, m[0].size()).size();
}

SolveResult solve(RatMatrix m, std::vector<Rational> rhs, std::size_t ncols) {
    if (m.size() != rhs.size()) throw std::invalid_argument("row count mismatch");
    for (const auto& row : m)
        if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
    SolveResult out;
    auto piv = reduce(m, &rhs, ncols);
    out.rank = piv.size();
    out.nullity = ncols - out.rank;
    for (std::size_t i = out.rank; i < rhs.size(); ++i)
        if (rhs[i] != 0) return out;
    out.consistent = true;
    out.x.assign(ncols, Rational(0));
    for (std::size_t i = 0; i < piv.size(); ++i) out.x[piv[i]] = rhs[i];
    return out;
}

}  // namespace sfm
