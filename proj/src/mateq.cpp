#include "cdgforge/mateq.hpp"

namespace cdgforge {

MatrixEquations::MatrixEquations(Field field) : field_(field) {}

int MatrixEquations::add_unknown(size_t rows, size_t cols) {
    unknowns_.push_back({rows, cols, num_vars_});
    num_vars_ += rows * cols;
    return static_cast<int>(unknowns_.size()) - 1;
}

int MatrixEquations::add_equation(size_t rows, size_t cols) {
    equations_.push_back({rows, cols, num_rows_});
    num_rows_ += rows * cols;
    return static_cast<int>(equations_.size()) - 1;
}

void MatrixEquations::add_term(int eq, int var, const Matrix& a, const Matrix& b, const Scalar& c) {
    const Unknown& u = unknowns_[var];
    const Equation& e = equations_[eq];
    if (a.rows() != e.rows || b.cols() != e.cols || a.cols() != u.rows || b.rows() != u.cols)
        throw ArithmeticError("MatrixEquations::add_term shape mismatch");
    terms_.push_back({eq, var, a, b, c});
}

void MatrixEquations::add_left_term(int eq, int var, const Matrix& a, const Scalar& c) {
    add_term(eq, var, a, Matrix::identity(field_, unknowns_[var].cols), c);
}

void MatrixEquations::add_right_term(int eq, int var, const Matrix& b, const Scalar& c) {
    add_term(eq, var, Matrix::identity(field_, unknowns_[var].rows), b, c);
}

void MatrixEquations::add_rhs(int eq, const Matrix& r) {
    const Equation& e = equations_[eq];
    if (r.rows() != e.rows || r.cols() != e.cols)
        throw ArithmeticError("MatrixEquations::add_rhs shape mismatch");
    rhs_.push_back({eq, r});
}

MatrixEquations::Solution MatrixEquations::solve() const {
    Matrix big(field_, num_rows_, num_vars_);
    Matrix rhs(field_, num_rows_, 1);
    for (const Term& t : terms_) {
        const Unknown& u = unknowns_[t.var];
        const Equation& e = equations_[t.eq];
        Matrix chunk = Matrix::kron(t.b.transposed(), t.a).scaled(t.c);
        for (size_t i = 0; i < e.rows * e.cols; ++i)
            for (size_t j = 0; j < u.rows * u.cols; ++j)
                big.at(e.offset + i, u.offset + j) = field_.add(big.at(e.offset + i, u.offset + j), chunk.at(i, j));
    }
    for (const auto& [eq, r] : rhs_) {
        Matrix v = r.vec();
        const Equation& e = equations_[eq];
        for (size_t i = 0; i < v.rows(); ++i)
            rhs.at(e.offset + i, 0) = field_.add(rhs.at(e.offset + i, 0), v.at(i, 0));
    }

    Solution out;
    auto unpack = [&](const Matrix& flat) {
        std::vector<Matrix> per_var;
        per_var.reserve(unknowns_.size());
        for (const Unknown& u : unknowns_)
            per_var.push_back(Matrix::unvec(flat.submatrix(u.offset, 0, u.rows * u.cols, 1), field_, u.rows, u.cols));
        return per_var;
    };

    auto part = big.solve(rhs);
    if (!part)
        return out;
    out.solvable = true;
    out.particular = unpack(*part);
    Matrix ker = big.kernel_basis();
    for (size_t k = 0; k < ker.cols(); ++k)
        out.kernel.push_back(unpack(ker.submatrix(0, k, num_vars_, 1)));
    return out;
}

}  // namespace cdgforge
