#ifndef AGKIT_LINALG_HPP
#define AGKIT_LINALG_HPP

#include <vector>

#include "agkit/rat.hpp"

namespace agkit {

using RatMat = std::vector<std::vector<Rat>>;

struct RrefResult {
    RatMat mat;
    int rank = 0;
    std::vector<int> pivots; // pivot columns in increasing order
};

// Exact reduced row echelon form by Gauss-Jordan elimination.
inline RrefResult rref(RatMat m) {
    RrefResult out;
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    for (auto& r : m)
        if (r.size() != cols) throw error("rref: ragged matrix");
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    out.rank = static_cast<int>(r);
    out.mat = std::move(m);
    return out;
}

inline int matrix_rank(const RatMat& m) { return rref(m).rank; }

} // namespace agkit

#endif
