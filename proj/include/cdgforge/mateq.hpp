#pragma once

#include <vector>

#include "cdgforge/matrix.hpp"

namespace cdgforge {

/* Solver for simultaneous matrix equations
 *     sum_t  c_t * A_t * X_{v_t} * B_t  =  R      (one such per equation)
 * in several unknown matrices X_v. Equations are assembled via
 * vec(AXB) = kron(B^T, A) vec(X) into one dense linear system.
 *
 * Declare all unknowns before adding equations.
 */
class MatrixEquations {
  public:
    explicit MatrixEquations(Field field);

    int add_unknown(size_t rows, size_t cols);

    /* Begin an equation of shape rows x cols with zero right-hand side. */
    int add_equation(size_t rows, size_t cols);
    /* Adds c * A * X_var * B to the equation's left-hand side. */
    void add_term(int eq, int var, const Matrix& a, const Matrix& b, const Scalar& c);
    /* Adds c * A * X_var to the equation (B = identity). */
    void add_left_term(int eq, int var, const Matrix& a, const Scalar& c);
    /* Adds c * X_var * B to the equation (A = identity). */
    void add_right_term(int eq, int var, const Matrix& b, const Scalar& c);
    void add_rhs(int eq, const Matrix& r);

    struct Solution {
        bool solvable = false;
        /* particular[v] solves the system; kernel[k][v] spans homogeneous solutions */
        std::vector<Matrix> particular;
        std::vector<std::vector<Matrix>> kernel;
        size_t kernel_dim() const { return kernel.size(); }
    };

    Solution solve() const;

  private:
    struct Unknown {
        size_t rows, cols, offset;
    };
    struct Equation {
        size_t rows, cols, offset;
    };

    Field field_;
    std::vector<Unknown> unknowns_;
    std::vector<Equation> equations_;
    size_t num_vars_ = 0;
    size_t num_rows_ = 0;
    /* (eq, var, A, B, c) terms, expanded lazily at solve time */
    struct Term {
        int eq, var;
        Matrix a, b;
        Scalar c;
    };
    std::vector<Term> terms_;
    std::vector<std::pair<int, Matrix>> rhs_;
};

}  // namespace cdgforge
