#pragma once

#include "cdgforge/tame.hpp"

namespace cdgforge {

/* Curved mixed complex with curvature w: finite-support complex of
 * S-modules (X, d) with a square-zero nullhomotopy s for multiplication by
 * w, i.e. d^2 = 0, s^2 = 0, ds + sd = w. Equivalently a finite-support
 * module over K_{S,w}. */
struct MixedComplex {
    AlgebraPtr S;
    std::vector<Scalar> w;
    std::map<int, FinModule> comp;
    std::map<int, Matrix> d; /* d[k]: comp[k] -> comp[k+1] */
    std::map<int, Matrix> s; /* s[k]: comp[k] -> comp[k-1] */

    size_t dim(int k) const {
        auto it = comp.find(k);
        return it == comp.end() ? 0 : it->second.dim();
    }
    FinModule component(int k) const;
    Matrix dmap(int k) const;
    Matrix smap(int k) const;
    bool is_zero() const { return comp.empty(); }
    int min_degree() const;
    int max_degree() const;
};

ValidationReport check_mixed(const MixedComplex& x);

/* (S,w)-duplex: f: M0 <=> M1 : g with fg = w and gf = w. */
struct Duplex {
    AlgebraPtr S;
    std::vector<Scalar> w;
    FinModule m0, m1;
    Matrix f, g;
};

ValidationReport check_duplex(const Duplex& m);

/* conversions to the module categories */
CdgModule mixed_to_cdg(const CdgRingPtr& koszul_ring, const MixedComplex& x);
MixedComplex cdg_to_mixed(const CdgModule& x);
CdgModule duplex_to_cdg(const CdgRingPtr& two_periodic_ring, const Duplex& m);
Duplex cdg_to_duplex(const CdgModule& x);

/* suspension of duplexes: Sigma M = (M1 <=> M0; -g, -f) */
Duplex duplex_suspend(const Duplex& m);
Duplex duplex_direct_sum(const Duplex& a, const Duplex& b);

struct DuplexMorphism {
    Matrix c0, c1; /* components M0 -> N0, M1 -> N1 */
};
bool is_duplex_morphism(const Duplex& a, const Duplex& b, const DuplexMorphism& f);
std::vector<DuplexMorphism> duplex_morphism_space(const Duplex& a, const Duplex& b);

enum class FoldMode { Sum, Product };
/* Folding of a finite-support mixed complex into a duplex along d + s. Even
 * and odd components are concatenated in ascending degree order; on finite
 * support the sum and product foldings agree. */
Duplex fold(const MixedComplex& x, FoldMode mode);

/* Stable bar resolution of a duplex: the 2-periodic K_{S,w}-module with
 * terms M0 (+) M1 in even degrees, forward maps
 *    (f  w; -1 -g)   and   (g  w; -1 -f)
 * and backward maps (0 0; 1 0). */
TameComplex sbar(const Duplex& m, const CdgRingPtr& koszul_ring, int window_radius = 4);

/* Morphisms sbar(M) -> X for finite-support X are zero outside supp(X) and
 * are checked on a slightly widened window. */
bool is_sbar_to_mixed_morphism(const Duplex& m, const MixedComplex& x, const GradedMap& phi);
std::vector<GradedMap> sbar_to_mixed_morphism_space(const Duplex& m, const MixedComplex& x);
/* Morphisms X -> sbar(Sigma M). */
bool is_mixed_to_sbar_sigma_morphism(const Duplex& m, const MixedComplex& x, const GradedMap& phi);
std::vector<GradedMap> mixed_to_sbar_sigma_morphism_space(const Duplex& m, const MixedComplex& x);

/* Adjoint transposition for sbar -| fold_prod. */
GradedMap transpose_prod_to_mixed(const Duplex& m, const MixedComplex& x, const DuplexMorphism& psi);
DuplexMorphism transpose_prod_to_duplex(const Duplex& m, const MixedComplex& x, const GradedMap& phi);
/* Adjoint transposition for fold_sum -| sbar . Sigma. */
GradedMap transpose_sum_to_mixed(const Duplex& m, const MixedComplex& x, const DuplexMorphism& psi);
DuplexMorphism transpose_sum_to_duplex(const Duplex& m, const MixedComplex& x, const GradedMap& phi);

/* counit sbar(fold_prod X) -> X and unit M -> fold_prod(sbar M) */
GradedMap counit_prod(const MixedComplex& x);
DuplexMorphism unit_prod(const Duplex& m, const CdgRingPtr& koszul_ring);

/* complexes of S-modules (no nullhomotopy) */
struct SModuleComplex {
    AlgebraPtr S;
    std::map<int, FinModule> comp;
    std::map<int, Matrix> d;

    size_t dim(int k) const {
        auto it = comp.find(k);
        return it == comp.end() ? 0 : it->second.dim();
    }
    Matrix dmap(int k) const;
};
SModuleComplex underlying_complex(const MixedComplex& x);
SModuleComplex suspend_complex(const SModuleComplex& v, int n);

/* K_{S,w} (x)_S V for a complex of S-modules V, an induced K-module with
 * components V^n (+) V^{n+1}. */
MixedComplex induce_koszul(const CdgRingPtr& koszul_ring, const SModuleComplex& v, int shift);

/* Augmented bar complex: terms T_k = K (x)_S Sigma^k X for k <= depth with
 * bar differentials a(x)x |-> as(x)x + (-1)^k a(x)sx and augmentation
 * K (x) X -> X. */
struct BarComplex {
    MixedComplex x;
    std::vector<MixedComplex> terms;
    std::vector<GradedMap> maps; /* maps[k]: terms[k+1] -> terms[k] */
    GradedMap augmentation;      /* terms[0] -> x */
};
BarComplex bar_complex(const MixedComplex& x, size_t depth);
/* exactness of the augmented bar sequence in each internal degree of the
 * window; requires depth large enough that the depth-th term vanishes on the
 * window (refuses otherwise) */
AcyclicityVerdict bar_acyclic_on(const BarComplex& b, int lo, int hi);

/* Completed bar resolution B_prod(X): closed form with (B X)^n = prod_{k>=n}
 * X^k, differential acting on X^k as d+s-id for k = n (mod 2) and w-d-s
 * otherwise, s acting as id on X^k for k = n (mod 2) and 0 otherwise. */
TameComplex completed_bar_closed(const MixedComplex& x, const CdgRingPtr& koszul_ring);

/* Independent totalization of the bar complex via the suspension
 * isomorphisms a(x)x |-> (-1)^{k|a| + k(k+1)/2} a(x)x. The mutated variant
 * drops the k|a| term; it must disagree with the closed form. */
enum class BarSignConvention { Quoted, MutatedDropDegreeTerm };
struct CompletedBarCrossCheck {
    bool equal;
    std::string detail;
};
CompletedBarCrossCheck completed_bar_crosscheck(const MixedComplex& x, const CdgRingPtr& koszul_ring,
                                                BarSignConvention convention);

/* q: B_prod X -> X, components (x_k)_{k>=n} |-> x_n + s x_{n+1} */
GradedMap completed_bar_q(const MixedComplex& x);

/* The canonical epimorphism alpha: sbar(fold_prod X) -> B_prod X, its kernel
 * and the filtration F_i of the kernel with F_i/F_{i+1} = K (x) Sigma^{-2i-2} X. */
struct AlphaData {
    TameComplex sbar_fold;
    TameComplex bprod;
    /* alpha in the coordinates of sbar(fold X): per-degree matrices on the
     * window of bprod */
    GradedMap alpha;
    TameComplex kernel;
    bool alpha_is_morphism;
    bool alpha_surjective;
};
AlphaData alpha_epi(const MixedComplex& x, const CdgRingPtr& koszul_ring);

/* closed-form filtration quotient F_i/F_{i+1} of ker(alpha) */
MixedComplex filtration_quotient(const MixedComplex& x, size_t i);
struct FiltrationCheck {
    bool isomorphic;
    IsoVerdict verdict;
};
FiltrationCheck filtration_quotient_check(const MixedComplex& x, const CdgRingPtr& koszul_ring, size_t i,
                                          Rng& rng);

/* epsilon_X = q . alpha, matrix-for-matrix on the support window */
bool counit_factorization_check(const MixedComplex& x, const CdgRingPtr& koszul_ring);

}  // namespace cdgforge
