#pragma once

#include <optional>
#include <vector>

#include "cdgforge/field.hpp"

namespace cdgforge {

/* Dense matrix over F_p or Q, row-major. Every operation is exact. */
class Matrix {
  public:
    Matrix() : Matrix(Field(), 0, 0) {}
    Matrix(Field field, size_t rows, size_t cols);

    static Matrix zero(Field field, size_t rows, size_t cols) { return Matrix(field, rows, cols); }
    static Matrix identity(Field field, size_t n);
    static Matrix from_ints(Field field, size_t rows, size_t cols, const std::vector<long long>& entries);

    const Field& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix negated() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;

    bool is_zero() const;
    bool is_identity() const;
    friend bool operator==(const Matrix& a, const Matrix& b);

    /* [this | rhs] and [this ; rhs] */
    Matrix hstack(const Matrix& rhs) const;
    Matrix vstack(const Matrix& rhs) const;
    Matrix submatrix(size_t row0, size_t col0, size_t nrows, size_t ncols) const;
    void paste(size_t row0, size_t col0, const Matrix& block);

    /* Kronecker product, vec(AXB) = kron(B^T, A) vec(X) with column-major vec. */
    static Matrix kron(const Matrix& a, const Matrix& b);

    size_t rank() const;
    /* Reduced row echelon form; pivot column indices appended to *pivots if given. */
    Matrix rref(std::vector<size_t>* pivots = nullptr) const;
    /* Columns form a basis of ker(this). */
    Matrix kernel_basis() const;
    /* Columns spanning the column space (a maximal independent subset). */
    Matrix column_space_basis() const;

    /* One solution x of this * x = b, if any. */
    std::optional<Matrix> solve(const Matrix& b) const;
    std::optional<Matrix> inverse() const;

    /* vec / unvec, column-major */
    Matrix vec() const;
    static Matrix unvec(const Matrix& v, Field field, size_t rows, size_t cols);

    std::string to_string() const;

  private:
    Field field_;
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/* Is v (a column) in the column span of basis? If so coords receives coefficients. */
bool in_column_span(const Matrix& basis, const Matrix& v, Matrix* coords = nullptr);

/* Dimension of (span W + span V) / span W, with representative columns of V. */
Matrix quotient_representatives(const Matrix& sub_basis, const Matrix& ambient_vectors);

}  // namespace cdgforge
