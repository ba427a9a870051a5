#include "orbjac/ratmat.hpp"

#include "orbjac/errors.hpp"

namespace orbjac {

Rat rat_det(RatMat m) {
    size_t n = m.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

RatMat rat_inverse(RatMat m) {
    size_t n = m.size();
    RatMat inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n)
            throw InputError("SingularExponentMatrix", "matrix is not invertible");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat lead = m[col][col];
        for (size_t c = 0; c < n; ++c) {
            m[col][c] /= lead;
            inv[col][c] /= lead;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

std::vector<Rat> rat_solve(RatMat m, std::vector<Rat> rhs) {
    RatMat inv = rat_inverse(std::move(m));
    size_t n = inv.size();
    std::vector<Rat> x(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) x[i] += inv[i][j] * rhs[j];
    return x;
}

}  // namespace orbjac
