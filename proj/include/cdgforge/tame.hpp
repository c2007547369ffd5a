#pragma once

#include "cdgforge/cdg.hpp"

namespace cdgforge {

/* End behavior of a tame complex beyond its explicit window. Periodic2 keeps
 * one cell per parity; Constant is the special case where both cells agree;
 * Zero has no cells. Maps are keyed by the parity of their source degree. */
struct TameEnd {
    enum class Kind { Zero, Constant, Periodic2 } kind = Kind::Zero;
    std::vector<FinModule> cell; /* size 2 for Constant/Periodic2, indexed by degree parity */
    std::vector<Matrix> d;       /* d[p]: cell[p] -> cell[1-p] */
    std::vector<Matrix> s;       /* s[p]: cell[p] -> cell[1-p] */

    static TameEnd zero() { return {}; }
    static TameEnd periodic2(FinModule even, FinModule odd, Matrix d_even, Matrix d_odd, Matrix s_even,
                             Matrix s_odd);
    static TameEnd constant(FinModule m, Matrix d, Matrix s);
};

/* Z-graded cdg module over a Koszul ring K_{S,w}, explicit on [lo, hi] and
 * described by end descriptors outside. Components are S-modules; d has
 * degree +1 and the s-action degree -1. Validated at construction: the end
 * cells match the window boundary and every module identity (d^2 = 0,
 * s^2 = 0, ds + sd = w, S-linearity) holds on [lo-4, hi+4]. */
class TameComplex {
  public:
    TameComplex(CdgRingPtr ring, int lo, int hi, std::vector<FinModule> comp, std::vector<Matrix> d,
                std::vector<Matrix> s, TameEnd below, TameEnd above);

    const CdgRingPtr& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const TameEnd& below() const { return below_; }
    const TameEnd& above() const { return above_; }

    const FinModule& component(int deg) const;
    size_t dim(int deg) const { return component(deg).dim(); }
    Matrix dmap(int deg) const; /* component(deg) -> component(deg+1) */
    Matrix smap(int deg) const; /* component(deg) -> component(deg-1) */

  private:
    CdgRingPtr ring_;
    int lo_, hi_;
    std::vector<FinModule> comp_;
    std::vector<Matrix> d_, s_;
    TameEnd below_, above_;
    FinModule zero_module_;
};

/* Explicit materialization of a degree window. */
struct Fragment {
    int lo, hi;
    std::vector<FinModule> comp; /* comp[i] at degree lo + i */
    std::vector<Matrix> d;       /* d[i]: comp[i] -> comp[i+1], i in [0, hi-lo) */
    std::vector<Matrix> s;       /* s[i]: comp[i] -> comp[i-1], i in [1, hi-lo] (s[0] unused) */

    size_t dim(int deg) const { return comp[static_cast<size_t>(deg - lo)].dim(); }
};

Fragment window_eval(const TameComplex& t, int lo, int hi);

/* Checks that the window identities hold and H^k vanishes for lo < k < hi.
 * Boundary degrees are excluded: the window carries no information there. */
struct AcyclicityVerdict {
    bool acyclic;
    int lo, hi;
    std::vector<int> nonzero_h; /* degrees with nonvanishing cohomology */
};
AcyclicityVerdict is_acyclic_on(const TameComplex& t, int lo, int hi);
AcyclicityVerdict fragment_acyclic_on(const Fragment& f);

}  // namespace cdgforge
