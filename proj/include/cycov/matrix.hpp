#pragma once

#include <vector>

#include "cycov/rational.hpp"

namespace cycov {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Exact rank by fraction-free (Bareiss) elimination: each row is scaled to
/// integers by its coefficient lcm, then eliminated over cpp_int.
inline long long matrix_rank(const RatMatrix& m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (size_t r = 0; r < rows; ++r) {
        if (m[r].size() != cols) throw SpecError("ragged matrix");
        Int l = 1;
        for (const auto& q : m[r]) l = lcm(l, denominator(q));
        for (size_t c = 0; c < cols; ++c)
            a[r][c] = numerator(m[r][c]) * (l / denominator(m[r][c]));
    }
    long long rank = 0;
    Int prev_pivot = 1;
    size_t pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t piv = pr;
        while (piv < rows && a[piv][pc] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[pr], a[piv]);
        for (size_t r = pr + 1; r < rows; ++r) {
            for (size_t c = pc + 1; c < cols; ++c) {
                Int num = a[pr][pc] * a[r][c] - a[r][pc] * a[pr][c];
                Int q, rem;
                divide_qr(num, prev_pivot, q, rem);
                if (rem != 0) throw OracleMismatch("fraction-free elimination lost exactness");
                a[r][c] = q;
            }
            a[r][pc] = 0;
        }
        prev_pivot = a[pr][pc];
        ++pr;
        ++rank;
    }
    return rank;
}

inline std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v) {
    std::vector<Rat> out(m.size(), Rat(0));
    for (size_t r = 0; r < m.size(); ++r) {
        if (m[r].size() != v.size()) throw SpecError("matrix/vector size mismatch");
        for (size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
    }
    return out;
}

inline bool is_zero_vector(const std::vector<Rat>& v) {
    for (const auto& q : v)
        if (q != 0) return false;
    return true;
}

}  // namespace cycov
