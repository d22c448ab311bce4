// Dense exact linear algebra over a field: rref, rank, kernels, solving.
#pragma once

#include <optional>
#include <vector>

#include "ksv/field.hpp"

namespace ksv {

class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const Field& f);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    const Field& field() const { return f_; }

    FieldElement& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const FieldElement& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    static Matrix identity(size_t n, const Field& f);
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const FieldElement& c) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    size_t rank() const;
    // Columns spanning the nullspace {x : Ax = 0}.
    std::vector<std::vector<FieldElement>> kernel_basis() const;
    // Column indices of a maximal independent subset (pivots of rref).
    std::vector<size_t> pivot_columns() const;

    std::vector<FieldElement> apply(const std::vector<FieldElement>& x) const;

    // Solve A x = b for each column b of B; nullopt if any system is
    // inconsistent. Returns a cols(A) x cols(B) matrix of solutions.
    std::optional<Matrix> solve(const Matrix& B) const;

  private:
    size_t r_ = 0, c_ = 0;
    Field f_;
    std::vector<FieldElement> a_;
};

} // namespace ksv
