#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cdgforge/matrix.hpp"

namespace cdgforge {

class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/* Finite-dimensional unital associative algebra over a field, given by
 * structure constants: e_i e_j = sum_k c[i][j][k] e_k. Validated at
 * construction: associativity on all basis triples and both unit laws. */
class FinAlgebra {
  public:
    FinAlgebra(Field field, size_t dim, std::vector<std::vector<std::vector<Scalar>>> mult,
               std::vector<Scalar> unit);

    /* F_p[x]/(x^n), basis 1, x, ..., x^{n-1}. */
    static std::shared_ptr<const FinAlgebra> truncated_polynomial(Field field, size_t n);
    static std::shared_ptr<const FinAlgebra> base_field(Field field);

    const Field& field() const { return field_; }
    size_t dim() const { return dim_; }
    const std::vector<Scalar>& unit() const { return unit_; }
    bool commutative() const { return commutative_; }

    /* product of elements given by coordinate vectors */
    std::vector<Scalar> multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
    /* matrix of left multiplication by the element a */
    Matrix left_mult(const std::vector<Scalar>& a) const;
    std::vector<Scalar> basis_product(size_t i, size_t j) const { return mult_[i][j]; }

    /* A small set of basis indices that generates the algebra together with 1. */
    const std::vector<size_t>& generators() const { return generators_; }

    /* Jacobson radical as columns of a basis matrix (dim x r). Requires a
     * commutative algebra; uses the Frobenius kernel in characteristic p and
     * the trace form over Q. */
    const Matrix& radical() const;
    /* A/rad is one-dimensional (split local) or zero-dimensional impossible;
     * covers below require split local or semisimple. */
    bool is_split_local() const;
    bool is_semisimple() const;

    std::shared_ptr<const FinAlgebra> opposite() const;

    friend bool operator==(const FinAlgebra& a, const FinAlgebra& b) {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.mult_ == b.mult_ && a.unit_ == b.unit_;
    }

  private:
    void compute_generators();

    Field field_;
    size_t dim_;
    std::vector<std::vector<std::vector<Scalar>>> mult_;
    std::vector<Scalar> unit_;
    bool commutative_ = true;
    std::vector<size_t> generators_;
    mutable std::optional<Matrix> radical_;
};

using AlgebraPtr = std::shared_ptr<const FinAlgebra>;

/* Finite-dimensional left module: one action matrix per algebra basis
 * element. Validated: action(1) = id and action(e_i)action(e_j) matches the
 * structure constants. */
class FinModule {
  public:
    FinModule(AlgebraPtr algebra, size_t dim, std::vector<Matrix> action);

    static FinModule zero(AlgebraPtr algebra);
    static FinModule regular(AlgebraPtr algebra); /* A as a module over itself */

    AlgebraPtr algebra() const { return algebra_; }
    size_t dim() const { return dim_; }
    const Matrix& action(size_t i) const { return action_[i]; }
    /* action of an element given by coordinates */
    Matrix action_of(const std::vector<Scalar>& a) const;

    FinModule direct_sum(const FinModule& other) const;
    /* Submodule spanned by the columns of inclusion (validated invariant);
     * returns the module together with the inclusion matrix in *incl. */
    FinModule submodule(const Matrix& span, Matrix* incl = nullptr) const;
    /* Quotient by the column span of sub; *proj receives the projection. */
    FinModule quotient(const Matrix& sub, Matrix* proj = nullptr) const;
    /* k-linear dual as a module over the opposite algebra. */
    FinModule dual(AlgebraPtr opposite) const;

    friend bool operator==(const FinModule& a, const FinModule& b);

  private:
    AlgebraPtr algebra_;
    size_t dim_;
    std::vector<Matrix> action_;
};

/* A morphism is any matrix commuting with the actions; helpers validate. */
bool is_module_morphism(const FinModule& src, const FinModule& dst, const Matrix& f);

}  // namespace cdgforge
