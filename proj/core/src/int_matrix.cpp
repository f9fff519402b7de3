#include "ehz/int_matrix.hpp"

#include <sstream>

namespace ehz {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::domain_error("IntMatrix: empty");
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw std::domain_error("IntMatrix: ragged rows");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::domain_error("IntMatrix: shape mismatch");
    IntMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

IntMatrix operator*(const Int& c, const IntMatrix& a) {
    IntMatrix r = a;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) *= c;
    return r;
}

IntMatrix operator-(const IntMatrix& a) { return Int(-1) * a; }

Int IntMatrix::det() const {
    if (rows_ != cols_) throw std::domain_error("det: not square");
    // Bareiss fraction-free elimination.
    IntMatrix a = *this;
    int n = rows_;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return Int(0);
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = v / prev;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntMatrix IntMatrix::adjugate() const {
    if (rows_ != cols_) throw std::domain_error("adjugate: not square");
    int n = rows_;
    if (n == 1) {
        IntMatrix r(1, 1);
        r.at(0, 0) = 1;
        return r;
    }
    IntMatrix adj(n, n);
    IntMatrix minor(n - 1, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int m = minor.det();
            adj.at(j, i) = ((i + j) % 2 == 0) ? m : -m;
        }
    return adj;
}

bool IntMatrix::is_upper_triangular() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < std::min(i, cols_); ++j)
            if (at(i, j) != 0) return false;
    return true;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

HnfResult hnf(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("hnf: not square");
    if (m.det() == 0) throw std::domain_error("hnf: singular matrix");
    int n = m.rows();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(n);

    auto add_row = [&](int dst, int src, const Int& c) {
        for (int j = 0; j < n; ++j) {
            a.at(dst, j) += c * a.at(src, j);
            u.at(dst, j) += c * u.at(src, j);
        }
    };
    auto swap_rows = [&](int r1, int r2) {
        for (int j = 0; j < n; ++j) {
            std::swap(a.at(r1, j), a.at(r2, j));
            std::swap(u.at(r1, j), u.at(r2, j));
        }
    };
    auto negate_row = [&](int r) {
        for (int j = 0; j < n; ++j) {
            a.at(r, j) = -a.at(r, j);
            u.at(r, j) = -u.at(r, j);
        }
    };

    for (int col = 0; col < n; ++col) {
        // Euclidean elimination below the pivot.
        for (;;) {
            int piv = -1;
            for (int i = col; i < n; ++i)
                if (a.at(i, col) != 0 &&
                    (piv < 0 || abs(a.at(i, col)) < abs(a.at(piv, col))))
                    piv = i;
            if (piv < 0) throw std::domain_error("hnf: singular matrix");
            if (piv != col) swap_rows(col, piv);
            bool done = true;
            for (int i = col + 1; i < n; ++i) {
                if (a.at(i, col) == 0) continue;
                Int q = floor_div(a.at(i, col), a.at(col, col));
                add_row(i, col, -q);
                if (a.at(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (a.at(col, col) < 0) negate_row(col);
        // Reduce the entries above the pivot into [0, pivot).
        for (int i = 0; i < col; ++i) {
            Int q = floor_div(a.at(i, col), a.at(col, col));
            if (q != 0) add_row(i, col, -q);
        }
    }
    return {a, u};
}

std::vector<Int> snf(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("snf: not square");
    int n = m.rows();
    IntMatrix a = m;
    if (a.det() == 0) throw std::domain_error("snf: singular matrix");

    std::vector<Int> divisors(n);
    for (int s = 0; s < n; ++s) {
        for (;;) {
            // Smallest nonzero entry of the trailing block to (s, s).
            int bi = -1, bj = -1;
            for (int i = s; i < n; ++i)
                for (int j = s; j < n; ++j)
                    if (a.at(i, j) != 0 &&
                        (bi < 0 || abs(a.at(i, j)) < abs(a.at(bi, bj)))) {
                        bi = i; bj = j;
                    }
            if (bi != s)
                for (int j = 0; j < n; ++j) std::swap(a.at(s, j), a.at(bi, j));
            if (bj != s)
                for (int i = 0; i < n; ++i) std::swap(a.at(i, s), a.at(i, bj));

            bool clean = true;
            for (int i = s + 1; i < n; ++i) {
                if (a.at(i, s) == 0) continue;
                Int q = floor_div(a.at(i, s), a.at(s, s));
                for (int j = s; j < n; ++j) a.at(i, j) -= q * a.at(s, j);
                if (a.at(i, s) != 0) clean = false;
            }
            for (int j = s + 1; j < n; ++j) {
                if (a.at(s, j) == 0) continue;
                Int q = floor_div(a.at(s, j), a.at(s, s));
                for (int i = s; i < n; ++i) a.at(i, j) -= q * a.at(i, s);
                if (a.at(s, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility fix-up: fold in any entry the pivot does not divide.
            bool fixed = true;
            for (int i = s + 1; i < n && fixed; ++i)
                for (int j = s + 1; j < n && fixed; ++j)
                    if (a.at(i, j) % a.at(s, s) != 0) {
                        for (int jj = s; jj < n; ++jj) a.at(s, jj) += a.at(i, jj);
                        fixed = false;
                    }
            if (fixed) break;
        }
        divisors[s] = abs(a.at(s, s));
    }
    return divisors;
}

} // namespace ehz
