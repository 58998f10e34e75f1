#pragma once

#include "mbb/rational.hpp"

#include <vector>

namespace mbb {

template <class T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    T &operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const T &operator()(int i, int j) const {
        return data[static_cast<std::size_t>(i) * cols + j];
    }

    bool operator==(const Mat &other) const = default;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
// All intermediates stay integral. det of the 0x0 matrix is 1.
Int det_exact(IntMat m);

// Exact solution of a * x = b over the rationals; a must be square and
// nonsingular (SingularSystem otherwise). b may have any number of columns.
RatMat solve_exact(IntMat a, IntMat b);

// Rational variant; clears denominators row by row and defers to the integer
// solver. Row scaling leaves the solution unchanged.
RatMat solve_exact(const RatMat &a, const RatMat &b);

} // namespace mbb
