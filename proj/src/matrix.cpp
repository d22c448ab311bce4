#include "ksv/matrix.hpp"

#include <optional>

namespace ksv {

Matrix::Matrix(size_t rows, size_t cols, const Field& f) : r_(rows), c_(cols), f_(f) {
    a_.assign(rows * cols, FieldElement::make(f, 0));
}

Matrix Matrix::identity(size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::make(f, 1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw Error("matrix product shape mismatch");
    Matrix out(r_, o.c_, f_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.c_; ++j) {
                const FieldElement& bkj = o.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error("matrix sum shape mismatch");
    Matrix out(r_, c_, f_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(r_, c_, f_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
}

Matrix Matrix::scaled(const FieldElement& c) const {
    Matrix out(r_, c_, f_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(c_, r_, f_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

namespace {

// In-place rref; returns pivot columns.
std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        FieldElement inv = m.at(row, col).inv();
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            FieldElement c = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - c * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

size_t Matrix::rank() const {
    Matrix m = *this;
    return rref(m).size();
}

std::vector<size_t> Matrix::pivot_columns() const {
    Matrix m = *this;
    return rref(m);
}

std::vector<std::vector<FieldElement>> Matrix::kernel_basis() const {
    Matrix m = *this;
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(c_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (size_t free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(c_, FieldElement::make(f_, 0));
        v[free] = FieldElement::make(f_, 1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& x) const {
    if (x.size() != c_) throw Error("matrix apply shape mismatch");
    std::vector<FieldElement> y(r_, FieldElement::make(f_, 0));
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j)
            if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
    return y;
}

std::optional<Matrix> Matrix::solve(const Matrix& B) const {
    if (B.rows() != r_) throw Error("solve shape mismatch");
    Matrix aug(r_, c_ + B.cols(), f_);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        for (size_t j = 0; j < B.cols(); ++j) aug.at(i, c_ + j) = B.at(i, j);
    }
    std::vector<size_t> pivots = rref(aug);
    for (size_t p : pivots)
        if (p >= c_) return std::nullopt; // pivot in the RHS block: inconsistent
    Matrix X(c_, B.cols(), f_);
    for (size_t k = 0; k < pivots.size(); ++k)
        for (size_t j = 0; j < B.cols(); ++j) X.at(pivots[k], j) = aug.at(k, c_ + j);
    return X;
}

} // namespace ksv
