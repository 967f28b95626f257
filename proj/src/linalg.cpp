#include "hilbpoly/linalg.hpp"

#include <string>

namespace hilbpoly {

std::vector<Rational> solve_linear(const Matrix& matrix,
                                   const std::vector<Rational>& rhs) {
    const size_t rows = matrix.size();
    if (rows == 0) return {};
    const size_t cols = matrix[0].size();
    if (rhs.size() != rows) throw Error("solve_linear: rhs size mismatch");
    if (rows < cols) throw Error("solve_linear: underdetermined system");
    for (const auto& row : matrix) {
        if (row.size() != cols) throw Error("solve_linear: ragged matrix");
    }

    // augmented working copy
    Matrix m(rows);
    for (size_t i = 0; i < rows; ++i) {
        m[i] = matrix[i];
        m[i].push_back(rhs[i]);
    }

    size_t r = 0;
    for (size_t c = 0; c < cols; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows)
            throw Error("solve_linear: singular system, no pivot in column " +
                        std::to_string(c));
        std::swap(m[r], m[p]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j <= cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    for (size_t i = r; i < rows; ++i) {
        if (m[i][ cols] != 0)
            throw Error("solve_linear: inconsistent system, equation " +
                        std::to_string(i) + " reduces to 0 = " +
                        to_string(m[i][cols]));
    }

    std::vector<Rational> sol(cols);
    for (size_t i = 0; i < cols; ++i) sol[i] = m[i][cols];

    // full exact back-substitution check for the surplus equations
    for (size_t i = cols; i < rows; ++i) {
        Rational acc(0);
        for (size_t j = 0; j < cols; ++j) acc += matrix[i][j] * sol[j];
        if (acc != rhs[i])
            throw Error("solve_linear: equation " + std::to_string(i) +
                        " not satisfied: " + to_string(acc) +
                        " != " + to_string(rhs[i]));
    }
    return sol;
}

}  // namespace hilbpoly
