#pragma once

#include "cdgforge/graded.hpp"
#include "cdgforge/homalg.hpp"

namespace cdgforge {

/* Curved differential graded ring: graded algebra with a degree +1
 * derivation and a curvature element w of degree 2 satisfying del(w) = 0 and
 * del^2(x) = [w, x]. A dg ring is the special case w = 0. */
class CdgRing {
  public:
    CdgRing(GradedAlgebraPtr base, std::vector<std::vector<Scalar>> diff_of_basis, std::vector<Scalar> curvature);

    /* an ordinary algebra R placed in degree 0 with zero differential */
    static std::shared_ptr<const CdgRing> ring_as_dg(AlgebraPtr r);
    /* K_{S,w} = S[s]/(s^2), deg s = -1, del(s) = w; requires w central */
    static std::shared_ptr<const CdgRing> koszul(AlgebraPtr s, std::vector<Scalar> w);
    /* S_w: Z/2-graded, S in even degree, zero odd part, zero differential,
     * curvature w */
    static std::shared_ptr<const CdgRing> curved_two_periodic(AlgebraPtr s, std::vector<Scalar> w);

    const GradedAlgebraPtr& base() const { return base_; }
    const Field& field() const { return base_->field(); }
    const GradingGroup& grading() const { return base_->grading(); }
    const std::vector<Scalar>& diff_of_basis(size_t i) const { return diff_[i]; }
    std::vector<Scalar> diff_of(const std::vector<Scalar>& a) const;
    const std::vector<Scalar>& curvature() const { return w_; }

    /* set for rings built by koszul()/curved_two_periodic(): the base algebra
     * S and the chosen central element */
    struct SContext {
        AlgebraPtr s;
        std::vector<Scalar> w;
    };
    const std::optional<SContext>& s_context() const { return s_context_; }

    friend bool operator==(const CdgRing& a, const CdgRing& b) {
        return *a.base_ == *b.base_ && a.diff_ == b.diff_ && a.w_ == b.w_;
    }

  private:
    GradedAlgebraPtr base_;
    std::vector<std::vector<Scalar>> diff_;
    std::vector<Scalar> w_;
    std::optional<SContext> s_context_;
};

using CdgRingPtr = std::shared_ptr<const CdgRing>;

/* Module over a cdg ring: graded module plus degree +1 differential with
 * the Leibniz rule and del^2 = w. (validated at construction) */
class CdgModule {
  public:
    CdgModule(CdgRingPtr ring, GradedModule under, std::map<int, Matrix> diff);

    static CdgModule zero(CdgRingPtr ring);
    /* the ring as a module over itself */
    static CdgModule regular(CdgRingPtr ring);
    /* one module M placed in degree k with zero differential (requires w M = 0
     * or w = 0 to validate; callers use it over dg rings) */
    static CdgModule stalk(CdgRingPtr ring, const FinModule& m, int k);

    const CdgRingPtr& ring() const { return ring_; }
    const GradedModule& under() const { return under_; }
    const GradingGroup& grading() const { return ring_->grading(); }
    size_t dim(int d) const { return under_.dim(d); }
    bool is_zero() const { return under_.is_zero(); }
    Matrix diff(int d) const;

    CdgModule direct_sum(const CdgModule& other) const;

    friend bool operator==(const CdgModule& a, const CdgModule& b) {
        return a.under_ == b.under_ && a.diff_same(b);
    }

  private:
    bool diff_same(const CdgModule& b) const;
    CdgRingPtr ring_;
    GradedModule under_;
    std::map<int, Matrix> diff_;
};

/* Degree-0 closed morphism of cdg modules. */
struct CdgMorphism {
    GradedMap mats;
};

bool is_cdg_morphism(const CdgModule& x, const CdgModule& y, const GradedMap& f);
CdgMorphism identity_morphism(const CdgModule& x);
CdgMorphism compose(const CdgModule& x, const CdgModule& y, const CdgModule& z, const CdgMorphism& g,
                    const CdgMorphism& f);

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};
ValidationReport validate_cdg_module(const CdgModule& x);

/* (Sigma^n X)^k = X^{k+n}, differential (-1)^{|n|} del, action sign
 * (-1)^{|a||n|}. */
CdgModule suspend(const CdgModule& x, int n);
GradedModule sharp(const CdgModule& x);

/* Left and right adjoints of sharp. */
CdgModule g_plus(const CdgRingPtr& ring, const GradedModule& z);
CdgModule g_minus(const CdgRingPtr& ring, const GradedModule& z);
CdgMorphism g_plus_morphism(const CdgRingPtr& ring, const GradedModule& z, const GradedModule& z2,
                            const GradedMap& psi);
CdgMorphism g_minus_morphism(const CdgRingPtr& ring, const GradedModule& z, const GradedModule& z2,
                             const GradedMap& psi);

/* transposition along G+ -| sharp: morphisms G+(Z) -> X correspond to graded
 * maps Z -> X#. */
GradedMap gplus_transpose_to_graded(const CdgModule& x, const GradedModule& z, const CdgMorphism& phi);
CdgMorphism gplus_transpose_from_graded(const CdgModule& x, const GradedModule& z, const GradedMap& psi);
/* transposition along sharp -| G-: graded maps X# -> Z correspond to
 * morphisms X -> G-(Z). */
GradedMap gminus_transpose_to_graded(const CdgModule& x, const GradedModule& z, const CdgMorphism& phi);
CdgMorphism gminus_transpose_from_graded(const CdgModule& x, const GradedModule& z, const GradedMap& psi);

struct ConeId {
    CdgModule cone;
    CdgMorphism epi;    /* cone -> X, surjective in every degree */
    GradedMap witness;  /* contraction h with del h + h del = id */
};
ConeId cone_id(const CdgModule& x);

/* Complex of vector spaces (finite support / Z2). */
struct VectorComplex {
    Field field;
    GradingGroup grading;
    std::map<int, size_t> dims;
    std::map<int, Matrix> d;

    size_t dim(int k) const {
        auto it = dims.find(grading.normalize(k));
        return it == dims.end() ? 0 : it->second;
    }
    Matrix diff(int k) const;
    struct Cohomology {
        size_t dim;
        Matrix reps; /* columns: representatives in C^k coordinates */
    };
    Cohomology cohomology(int k) const;
};

struct DgHom {
    VectorComplex complex;
    std::map<int, std::vector<GradedMap>> bases;
};
DgHom dg_hom(const CdgModule& x, const CdgModule& y);

struct HomotopyClasses {
    size_t dim;
    std::vector<GradedMap> representatives;
};
HomotopyClasses homotopy_classes(const CdgModule& x, const CdgModule& y, int k);

struct Contractibility {
    bool contractible;
    GradedMap witness;
};
Contractibility is_contractible(const CdgModule& x);

bool is_cdg_projective(const CdgModule& x);
bool is_cdg_injective(const CdgModule& x);

/* cohomology dimensions of (X, del); requires del^2 = 0 */
std::map<int, size_t> module_cohomology_dims(const CdgModule& x);

/* Isomorphism search in the space of cdg morphisms. */
std::vector<GradedMap> cdg_morphism_space(const CdgModule& x, const CdgModule& y);
struct CdgIsoResult {
    IsoVerdict verdict;
    std::optional<GradedMap> witness;
};
CdgIsoResult find_cdg_isomorphism(const CdgModule& x, const CdgModule& y, Rng& rng,
                                  unsigned long long exhaustive_limit = 10000, size_t samples = 200);

}  // namespace cdgforge
