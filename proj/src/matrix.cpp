#include "cdgforge/matrix.hpp"

#include <sstream>

namespace cdgforge {

Matrix::Matrix(Field field, size_t rows, size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = field.one();
    return m;
}

Matrix Matrix::from_ints(Field field, size_t rows, size_t cols, const std::vector<long long>& entries) {
    if (entries.size() != rows * cols)
        throw ArithmeticError("from_ints: entry count mismatch");
    Matrix m(field, rows, cols);
    for (size_t k = 0; k < entries.size(); ++k)
        m.a_[k] = field.from_int(entries[k]);
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ArithmeticError("matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (field_.is_zero(x))
                continue;
            for (size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = field_.add(out.at(i, j), field_.mul(x, rhs.at(k, j)));
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ArithmeticError("matrix sum shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k)
        out.a_[k] = field_.add(a_[k], rhs.a_[k]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + rhs.negated(); }

Matrix Matrix::negated() const {
    Matrix out(field_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k)
        out.a_[k] = field_.neg(a_[k]);
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(field_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k)
        out.a_[k] = field_.mul(c, a_[k]);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    for (const Scalar& x : a_)
        if (x.num != 0)
            return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_)
        return false;
    return *this == identity(field_, rows_);
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
    if (rows_ != rhs.rows_)
        throw ArithmeticError("hstack row mismatch");
    Matrix out(field_, rows_, cols_ + rhs.cols_);
    out.paste(0, 0, *this);
    out.paste(0, cols_, rhs);
    return out;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
    if (cols_ != rhs.cols_)
        throw ArithmeticError("vstack col mismatch");
    Matrix out(field_, rows_ + rhs.rows_, cols_);
    out.paste(0, 0, *this);
    out.paste(rows_, 0, rhs);
    return out;
}

Matrix Matrix::submatrix(size_t row0, size_t col0, size_t nrows, size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        throw ArithmeticError("submatrix out of range");
    Matrix out(field_, nrows, ncols);
    for (size_t i = 0; i < nrows; ++i)
        for (size_t j = 0; j < ncols; ++j)
            out.at(i, j) = at(row0 + i, col0 + j);
    return out;
}

void Matrix::paste(size_t row0, size_t col0, const Matrix& block) {
    if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_)
        throw ArithmeticError("paste out of range");
    for (size_t i = 0; i < block.rows_; ++i)
        for (size_t j = 0; j < block.cols_; ++j)
            at(row0 + i, col0 + j) = block.at(i, j);
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) {
            if (a.field_.is_zero(a.at(i, j)))
                continue;
            for (size_t k = 0; k < b.rows_; ++k)
                for (size_t l = 0; l < b.cols_; ++l)
                    out.at(i * b.rows_ + k, j * b.cols_ + l) = a.field_.mul(a.at(i, j), b.at(k, l));
        }
    return out;
}

Matrix Matrix::rref(std::vector<size_t>* pivots) const {
    Matrix m = *this;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t piv = row;
        while (piv < rows_ && field_.is_zero(m.at(piv, col)))
            ++piv;
        if (piv == rows_)
            continue;
        if (piv != row)
            for (size_t j = 0; j < cols_; ++j)
                std::swap(m.at(piv, j), m.at(row, j));
        Scalar inv = field_.inv(m.at(row, col));
        for (size_t j = col; j < cols_; ++j)
            m.at(row, j) = field_.mul(inv, m.at(row, j));
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || field_.is_zero(m.at(i, col)))
                continue;
            Scalar f = m.at(i, col);
            for (size_t j = col; j < cols_; ++j)
                m.at(i, j) = field_.sub(m.at(i, j), field_.mul(f, m.at(row, j)));
        }
        if (pivots)
            pivots->push_back(col);
        ++row;
    }
    return m;
}

size_t Matrix::rank() const {
    std::vector<size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

Matrix Matrix::kernel_basis() const {
    std::vector<size_t> pivots;
    Matrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots)
        is_pivot[c] = true;
    size_t nullity = cols_ - pivots.size();
    Matrix out(field_, cols_, nullity);
    size_t k = 0;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        out.at(free, k) = field_.one();
        for (size_t i = 0; i < pivots.size(); ++i)
            out.at(pivots[i], k) = field_.neg(r.at(i, free));
        ++k;
    }
    return out;
}

Matrix Matrix::column_space_basis() const {
    std::vector<size_t> pivots;
    rref(&pivots);
    Matrix out(field_, rows_, pivots.size());
    for (size_t k = 0; k < pivots.size(); ++k)
        for (size_t i = 0; i < rows_; ++i)
            out.at(i, k) = at(i, pivots[k]);
    return out;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows_ != rows_)
        throw ArithmeticError("solve shape mismatch");
    Matrix aug = hstack(b);
    std::vector<size_t> pivots;
    Matrix r = aug.rref(&pivots);
    for (size_t c : pivots)
        if (c >= cols_)
            return std::nullopt; /* pivot in rhs block: inconsistent */
    Matrix x(field_, cols_, b.cols_);
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t j = 0; j < b.cols_; ++j)
            x.at(pivots[i], j) = r.at(i, cols_ + j);
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_)
        return std::nullopt;
    auto x = solve(identity(field_, rows_));
    if (!x)
        return std::nullopt;
    if (!((*this) * (*x)).is_identity() || !((*x) * (*this)).is_identity())
        return std::nullopt;
    return x;
}

Matrix Matrix::vec() const {
    Matrix v(field_, rows_ * cols_, 1);
    for (size_t j = 0; j < cols_; ++j)
        for (size_t i = 0; i < rows_; ++i)
            v.at(j * rows_ + i, 0) = at(i, j);
    return v;
}

Matrix Matrix::unvec(const Matrix& v, Field field, size_t rows, size_t cols) {
    if (v.rows() != rows * cols || v.cols() != 1)
        throw ArithmeticError("unvec shape mismatch");
    Matrix m(field, rows, cols);
    for (size_t j = 0; j < cols; ++j)
        for (size_t i = 0; i < rows; ++i)
            m.at(i, j) = v.at(j * rows + i, 0);
    return m;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << cdgforge::to_string(at(i, j));
    }
    os << "]";
    return os.str();
}

bool in_column_span(const Matrix& basis, const Matrix& v, Matrix* coords) {
    auto x = basis.solve(v);
    if (!x)
        return false;
    if (coords)
        *coords = *x;
    return true;
}

Matrix quotient_representatives(const Matrix& sub_basis, const Matrix& ambient_vectors) {
    Matrix acc = sub_basis;
    Matrix reps(sub_basis.field(), ambient_vectors.rows(), 0);
    for (size_t j = 0; j < ambient_vectors.cols(); ++j) {
        Matrix v = ambient_vectors.submatrix(0, j, ambient_vectors.rows(), 1);
        Matrix cand = acc.hstack(v);
        if (cand.rank() > acc.rank()) {
            acc = cand;
            reps = reps.hstack(v);
        }
    }
    return reps;
}

}  // namespace cdgforge
