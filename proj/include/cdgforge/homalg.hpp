#pragma once

#include <functional>
#include <optional>

#include "cdgforge/algebra.hpp"
#include "cdgforge/rng.hpp"

namespace cdgforge {

/* Basis of Hom_A(M, N) as dim(N) x dim(M) matrices. */
std::vector<Matrix> hom_space(const FinModule& m, const FinModule& n);

/* Minimal projective cover P -> M over a split local or semisimple algebra.
 * kernel_incl receives the inclusion of ker(epi) into P. */
struct Cover {
    FinModule p;
    Matrix epi;          /* dim M x dim P */
    FinModule syzygy;    /* ker(epi) */
    Matrix kernel_incl;  /* dim P x dim syzygy */
};
Cover projective_cover(const FinModule& m);

/* Injective envelope M -> E via the dual projective cover over the opposite
 * algebra. */
struct Envelope {
    FinModule e;
    Matrix mono;       /* dim E x dim M */
    FinModule cosyzygy;
    Matrix proj;       /* dim cosyzygy x dim E, cokernel projection */
};
Envelope injective_envelope(const FinModule& m);

struct Ext1Result {
    size_t dim;
    /* cocycles: maps syzygy -> N representing a basis of Ext^1 */
    std::vector<Matrix> cocycles;
};
Ext1Result ext1(const FinModule& m, const FinModule& n);

struct Classification {
    bool projective;
    bool injective;
};
Classification classify_module(const FinModule& m);

enum class StableMode { Projectives, Injectives };
struct StableHomResult {
    size_t dim;
    std::vector<Matrix> representatives;
};
StableHomResult stable_hom(const FinModule& m, const FinModule& n, StableMode mode);

/* Does f: M -> N factor through the chosen class? (lifting along the cover /
 * extending along the envelope, one exact linear solve) */
bool factors_through(const FinModule& m, const FinModule& n, const Matrix& f, StableMode mode);

enum class IsoVerdict { Yes, No, Undecided };
struct IsoResult {
    IsoVerdict verdict;
    std::optional<Matrix> witness;
};
/* Searches hom_space(M, N) for an invertible element: exhaustively when the
 * space has at most exhaustive_limit elements, otherwise by random sampling. */
IsoResult find_isomorphism(const FinModule& m, const FinModule& n, Rng& rng,
                           unsigned long long exhaustive_limit = 10000, size_t samples = 200);

/* Generic invertible-combination search over an arbitrary hom basis; apply is
 * given a coefficient vector and must return the candidate's invertibility. */
IsoVerdict search_invertible(const Field& field, size_t basis_size,
                             const std::function<bool(const std::vector<Scalar>&)>& try_coeffs, Rng& rng,
                             unsigned long long exhaustive_limit, size_t samples);

struct ResolutionStep {
    FinModule syzygy;
    size_t cover_rank; /* number of A-summands of the cover */
};
struct ResolutionResult {
    enum class Verdict { Finite, Infinite, Unknown } verdict;
    size_t pd = 0;                    /* meaningful when Finite */
    size_t repeat_at = 0, repeat_of = 0; /* meaningful when Infinite: syzygy indices */
    std::vector<ResolutionStep> steps;
};
ResolutionResult projective_resolution(const FinModule& m, size_t max_steps, Rng& rng);

}  // namespace cdgforge
