#pragma once

#include "cdgforge/model.hpp"

namespace cdgforge {

/* The standard corpus: the smallest instances where the curvature is
 * nonzero and every sign matters. Over F_p (default p = 3):
 *   S2 = F_p[x]/(x^2), S4 = F_p[x]/(x^4), w = x^2,
 *   K = K_{S4,w}, X_K = K over itself, D1 = (S4 <=> S4; x, x). */
struct Corpus {
    Field field;
    AlgebraPtr base;     /* F_p */
    AlgebraPtr s2;
    AlgebraPtr s4;
    std::vector<Scalar> w;      /* x^2 in S4 */
    std::vector<Scalar> x_s2;   /* x in S2 */
    CdgRingPtr koszul;          /* K_{S4, x^2} */
    CdgRingPtr two_periodic;    /* (S4)_{x^2} */
    CdgRingPtr ch_s2;           /* ring_as_dg(S2) */
    CdgRingPtr ch_base;         /* ring_as_dg(F_p) */

    FinModule s2_reg;  /* S2 over itself */
    FinModule k_s2;    /* S2/(x) */
    FinModule s4_reg;
    FinModule k_s4;

    MixedComplex x_k;  /* K over itself as a curved mixed complex */
    Duplex d1;

    /* simple S4-module of dimension j (a single Jordan block), j <= 4 */
    FinModule s4_jordan(size_t j) const;
    FinModule s2_jordan(size_t j) const;
};

Corpus standard_corpus(long long p = 3);

/* random generators used by the verification suites */
FinModule random_s4_module(const Corpus& c, Rng& rng, size_t max_blocks = 2);
FinModule random_s2_module(const Corpus& c, Rng& rng, size_t max_blocks = 2);

struct RandomMixedOptions {
    int min_degree = -2;
    int max_degree = 2;
    size_t max_blocks = 2;
    size_t tries = 200;
};
/* Random valid mixed complex over (S4, x^2): random S-linear d with d^2 = 0
 * built degree by degree, then s solved from ds + sd = w and s^2 = 0 within
 * the affine solution space; resamples until a valid instance appears. */
MixedComplex random_mixed_complex(const Corpus& c, Rng& rng, const RandomMixedOptions& opt = {});

/* Random duplex over (S4, x^2): random f, then g solved from fg = gf = w. */
Duplex random_duplex(const Corpus& c, Rng& rng, size_t max_blocks = 2, size_t tries = 200);

/* Random graded module over ring_as_dg(S2) with small support. */
GradedModule random_graded_module(const Corpus& c, Rng& rng, int min_degree = -2, int max_degree = 2);

/* Random duplex morphism sampled from the morphism space basis. */
DuplexMorphism random_duplex_morphism(const std::vector<DuplexMorphism>& basis, const Duplex& a,
                                      const Duplex& b, Rng& rng);
GradedMap random_graded_map(const std::vector<GradedMap>& basis, const Field& f, Rng& rng);

}  // namespace cdgforge
