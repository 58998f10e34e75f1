#include "mbb/matrix.hpp"

#include "mbb/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <utility>

namespace mbb {

namespace {

// One fraction-free elimination pass over an n x m matrix whose leading n
// columns form the square system. Returns the sign flip accumulated by row
// swaps, or 0 if the leading block is singular.
int bareiss_eliminate(IntMat &m, int n) {
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (m(i, k) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            return 0;
        }
        if (pivot != k) {
            for (int j = 0; j < m.cols; ++j) {
                std::swap(m(pivot, j), m(k, j));
            }
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < m.cols; ++j) {
                Int t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                // Exact by the Bareiss identity: prev divides t.
                m(i, j) = t / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign;
}

} // namespace

Int det_exact(IntMat m) {
    if (m.rows != m.cols) {
        throw Error("det_exact: matrix is not square");
    }
    const int n = m.rows;
    if (n == 0) {
        return 1;
    }
    const int sign = bareiss_eliminate(m, n);
    if (sign == 0) {
        return 0;
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

RatMat solve_exact(IntMat a, IntMat b) {
    if (a.rows != a.cols) {
        throw Error("solve_exact: matrix is not square");
    }
    if (b.rows != a.rows) {
        throw Error("solve_exact: right-hand side has wrong row count");
    }
    const int n = a.rows;
    const int m = b.cols;
    IntMat aug(n, n + m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            aug(i, j) = a(i, j);
        }
        for (int j = 0; j < m; ++j) {
            aug(i, n + j) = b(i, j);
        }
    }
    if (bareiss_eliminate(aug, n) == 0) {
        throw SingularSystemError("solve_exact: singular system");
    }
    // Rational back substitution on the integral upper-triangular system.
    RatMat x(n, m);
    for (int i = n - 1; i >= 0; --i) {
        for (int j = 0; j < m; ++j) {
            Rat acc(aug(i, n + j));
            for (int k = i + 1; k < n; ++k) {
                acc -= Rat(aug(i, k)) * x(k, j);
            }
            x(i, j) = acc / Rat(aug(i, i));
        }
    }
    return x;
}

RatMat solve_exact(const RatMat &a, const RatMat &b) {
    if (a.rows != a.cols || b.rows != a.rows) {
        throw Error("solve_exact: dimension mismatch");
    }
    const int n = a.rows;
    const int m = b.cols;
    IntMat ia(n, n);
    IntMat ib(n, m);
    for (int i = 0; i < n; ++i) {
        Int scale = 1;
        for (int j = 0; j < n; ++j) {
            scale = boost::multiprecision::lcm(scale, Int(denominator(a(i, j))));
        }
        for (int j = 0; j < m; ++j) {
            scale = boost::multiprecision::lcm(scale, Int(denominator(b(i, j))));
        }
        for (int j = 0; j < n; ++j) {
            ia(i, j) = Int(numerator(a(i, j))) * (scale / Int(denominator(a(i, j))));
        }
        for (int j = 0; j < m; ++j) {
            ib(i, j) = Int(numerator(b(i, j))) * (scale / Int(denominator(b(i, j))));
        }
    }
    return solve_exact(std::move(ia), std::move(ib));
}

} // namespace mbb
