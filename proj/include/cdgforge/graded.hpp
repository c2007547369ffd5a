#pragma once

#include <map>

#include "cdgforge/algebra.hpp"

namespace cdgforge {

/* Z with parity = reduction mod 2, or Z/2 with parity = identity. The
 * distinguished element 1 has odd parity in both cases. */
struct GradingGroup {
    enum class Kind { Z, Z2 };
    Kind kind = Kind::Z;

    int normalize(int d) const { return kind == Kind::Z2 ? ((d % 2) + 2) % 2 : d; }
    int parity(int d) const { return ((d % 2) + 2) % 2; }
    int sign_of_parity(int d) const { return parity(d) == 0 ? 1 : -1; }

    friend bool operator==(const GradingGroup&, const GradingGroup&) = default;
};

/* Graded algebra with a homogeneous basis: basis element i has degree
 * degree[i], multiplication adds degrees, the unit sits in degree 0. */
class GradedAlgebra {
  public:
    GradedAlgebra(Field field, GradingGroup grading, std::vector<int> degree,
                  std::vector<std::vector<std::vector<Scalar>>> mult, std::vector<Scalar> unit);

    const Field& field() const { return field_; }
    const GradingGroup& grading() const { return grading_; }
    size_t dim() const { return dim_; }
    int degree(size_t i) const { return degree_[i]; }
    const std::vector<Scalar>& unit() const { return unit_; }
    const std::vector<Scalar>& basis_product(size_t i, size_t j) const { return mult_[i][j]; }
    const std::vector<size_t>& generators() const { return generators_; }

    std::vector<Scalar> multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
    /* basis indices of a given degree */
    std::vector<size_t> component(int d) const;
    size_t component_dim(int d) const { return component(d).size(); }
    /* degree-0 part as an algebra, with its basis index map */
    std::shared_ptr<const FinAlgebra> degree_zero_part(std::vector<size_t>* index_map = nullptr) const;

    friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
        return a.field_ == b.field_ && a.grading_ == b.grading_ && a.degree_ == b.degree_ &&
               a.mult_ == b.mult_ && a.unit_ == b.unit_;
    }

  private:
    Field field_;
    GradingGroup grading_;
    size_t dim_;
    std::vector<int> degree_;
    std::vector<std::vector<std::vector<Scalar>>> mult_;
    std::vector<Scalar> unit_;
    std::vector<size_t> generators_;
};

using GradedAlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/* Degree-indexed family of matrices; absent degrees mean zero. Used both for
 * graded morphisms and for the degreewise data of graded modules. */
struct GradedMap {
    std::map<int, Matrix> comp;

    const Matrix* find(int d) const {
        auto it = comp.find(d);
        return it == comp.end() ? nullptr : &it->second;
    }
};

/* Finitely supported graded module over a graded algebra. action[b][d] is the
 * matrix of basis element b acting X^d -> X^{d + deg b}; matrices between
 * zero components are omitted. */
class GradedModule {
  public:
    GradedModule(GradedAlgebraPtr algebra, std::map<int, size_t> dims, std::vector<GradedMap> action);

    static GradedModule zero(GradedAlgebraPtr algebra);
    /* the algebra as a module over itself, generator in degree `shift` --
     * component at degree d is the algebra component of degree d - shift */
    static GradedModule free_module(GradedAlgebraPtr algebra, int shift);

    const GradedAlgebraPtr& algebra() const { return algebra_; }
    const GradingGroup& grading() const { return algebra_->grading(); }
    const std::map<int, size_t>& dims() const { return dims_; }
    size_t dim(int d) const {
        auto it = dims_.find(grading().normalize(d));
        return it == dims_.end() ? 0 : it->second;
    }
    size_t total_dim() const;
    bool is_zero() const { return dims_.empty(); }
    int min_degree() const; /* throws on zero module */
    int max_degree() const;

    /* action matrix of basis element b on X^d, materialized with zeros */
    Matrix action(size_t b, int d) const;
    /* action of an arbitrary homogeneous element (coords, pure degree g) */
    Matrix action_of(const std::vector<Scalar>& coords, int g, int d) const;

    GradedModule direct_sum(const GradedModule& other) const;
    /* suspension with the action sign (-1)^{|a||n|} */
    GradedModule suspend(int n) const;
    /* dual over the graded opposite algebra: D(X)^d = (X^{-d})^* */
    GradedModule dual(GradedAlgebraPtr opposite) const;

    friend bool operator==(const GradedModule& a, const GradedModule& b) {
        return a.dims_ == b.dims_ && a.action_same(b);
    }

  private:
    bool action_same(const GradedModule& b) const;
    GradedAlgebraPtr algebra_;
    std::map<int, size_t> dims_;
    std::vector<GradedMap> action_;
};

GradedAlgebraPtr graded_opposite(const GradedAlgebraPtr& a);

/* Basis of the space of A-linear maps X -> Y of degree `twist`, with the sign
 * rule f(ax) = (-1)^{|a| |twist|} a f(x). Components f_d: X^d -> Y^{d+twist}. */
std::vector<GradedMap> graded_hom_basis(const GradedModule& x, const GradedModule& y, int twist);

/* flatten/unflatten graded maps against the component shapes of a (twist)-hom */
std::vector<std::pair<int, std::pair<size_t, size_t>>> graded_hom_shapes(const GradedModule& x,
                                                                         const GradedModule& y, int twist);
Matrix flatten_graded_map(const GradedMap& f, const std::vector<std::pair<int, std::pair<size_t, size_t>>>& shapes,
                          const Field& field);
GradedMap unflatten_graded_map(const Matrix& v, const std::vector<std::pair<int, std::pair<size_t, size_t>>>& shapes,
                               const Field& field);

GradedMap compose_graded(const GradedModule& x, const GradedModule& y, const GradedModule& z, const GradedMap& g,
                         int deg_g, const GradedMap& f, int deg_f);

/* Graded projective cover machinery over graded-split-local algebras (the
 * degree-zero part is split local or semisimple and all other components are
 * nilpotent). */
struct GradedCover {
    GradedModule p;
    GradedMap epi;
    std::map<int, size_t> kernel_dims;
};
GradedCover graded_projective_cover(const GradedModule& x);
bool graded_projective(const GradedModule& x);
bool graded_injective(const GradedModule& x);

}  // namespace cdgforge
