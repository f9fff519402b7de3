#pragma once

#include "ehz/rational.hpp"
#include <vector>

namespace ehz {

/// Dense integer matrix with exact arithmetic.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {
        if (rows <= 0 || cols <= 0) throw std::domain_error("IntMatrix: nonpositive dimension");
    }
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return e_[i * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[i * cols_ + j]; }

    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Int& c, const IntMatrix& a);
    friend IntMatrix operator-(const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Int det() const;
    /// Adjugate: adj(A) * A = det(A) * I.
    IntMatrix adjugate() const;
    bool is_upper_triangular() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

struct HnfResult {
    IntMatrix h;         // upper-triangular row HNF, positive diagonal
    IntMatrix transform; // unimodular, transform * input = h
};

/// Row Hermite normal form of a square nonsingular matrix: upper triangular,
/// positive diagonal, entries above each pivot reduced into [0, pivot).
HnfResult hnf(const IntMatrix& m);

/// Elementary divisor chain d_1 | d_2 | ... | d_n of a nonsingular matrix.
std::vector<Int> snf(const IntMatrix& m);

} // namespace ehz
