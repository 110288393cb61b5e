#ifndef EXOTIC_CORRESPONDENCE_HPP
#define EXOTIC_CORRESPONDENCE_HPP

#include "exotic/exotic_cone.hpp"
#include "exotic/flag_tableaux.hpp"
#include "exotic/partitions.hpp"
#include "exotic/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace exotic {

// Jordan types lam with (orbit, lam) good: [(n-l,l)*] for types I / II0 / III,
// [(n-l,l)*, (n-l-1,l+1)*] for type IIstar (l = r+s).
std::vector<Partition> good_partitions(const ExoticOrbitLabel& lab);

// delta = dim exotic orbit + fiber dimension + Spaltenstein dimension.
// The pair is good iff delta == dim Y = k(n-k) + p - 1. Returns nullopt when
// the (lab, lam) stratum is empty. Throws on lam not of the two-step shapes
// (n-l,l)* or (n-l-1,l+1)*.
std::optional<long long> delta(const ExoticOrbitLabel& lab, const Partition& lam);

long long dim_conormal_variety(const Ambient& amb); // k(n-k) + p - 1

// Dimension of the admissible u-space of the fiber over (L, z) inside the
// G-orbit of Jordan type lam, computed directly by exact linear algebra
// (ker a^t, v-orthogonality, Im b^t) and cross-checked against the closed
// forms 0 / p - rk a / rk b / p - rk a - 1. Nullopt when the stratum is
// empty; ConsistencyError when the two routes disagree.
std::optional<unsigned long> fiber_dimension(const ExoticPoint& pt, const Partition& lam);

// A generic x = [[v u^t, a],[b, 0]] with x^2 = 0, x^(-theta) = z,
// x^theta in n_L and jordan_type(x) = lam; u is sampled from the admissible
// set of the (point, lam) stratum. All four postconditions are asserted.
RatMatrix generic_x(const ExoticPoint& pt, const Partition& lam, SeededRng& rng,
                    long bound = 1000);

// A generic W with Im x <= W <= ker x, dim W = k: Im x plus k - rk x random
// kernel vectors, resampled (<= 20 tries) if dimension-deficient.
Subspace generic_w(const RatMatrix& x, unsigned k, SeededRng& rng, long bound = 1000);

struct Witness {
    RatMatrix x;
    Subspace W;
    Subspace L;
};

struct PreimageEntry {
    Partition lam;
    MarkedTableau tableau;
    Witness witness;       // first sample that classified to the winner
    unsigned votes = 0;    // winner votes in the accepted round
    unsigned samples = 0;  // sample count of the accepted round
    bool escalated = false;
};

// The phi-preimage of the orbit: one entry per good lam, computed by
// majority vote over `samples` random (x, W) pairs. On a missing strict
// majority (or a winner below 90%), retries once with bound 10^6 and 101
// samples, then throws GenericityError with the full tally.
std::vector<PreimageEntry> phi_preimage(const ExoticOrbitLabel& lab, SeededRng& rng,
                                        unsigned samples = 25, long bound = 1000);

struct CorrespondenceEntry {
    MarkedTableau tableau;
    ExoticOrbitLabel label;
    Partition good_lam;
    Witness witness;
};

struct FiberInfo {
    ExoticOrbitLabel label;
    RefinedType refined = RefinedType::II0;
    std::vector<MarkedTableau> preimage;
};

struct CorrespondenceTable {
    Ambient ambient;
    std::vector<CorrespondenceEntry> entries; // total map, in Theta order
    std::vector<FiberInfo> fibers;            // in Pi order
    bool bijective = false;
    bool escalated = false;
};

struct CorrespondenceOptions {
    unsigned samples = 25;
    long bound = 1000;
    bool parallel = false;
};

// Runs phi_preimage over all of Pi_2^k and inverts to the total map
// Theta_2^k -> Pi_2^k. Each label owns a private RNG derived from
// (seed, label index), so parallel and serial runs produce identical tables.
// Throws ConsistencyError if totality or the fiber law fails.
CorrespondenceTable full_correspondence(const Ambient& amb, std::uint64_t seed,
                                        const CorrespondenceOptions& opts = {});

// Whether the computed table is a bijection; asserts agreement with the
// closed-form criterion p <= max{k, n-k, q+1} (ConsistencyError otherwise).
bool check_bijectivity_criterion(const Ambient& amb, const CorrespondenceTable& table);

// Closed form of phi for p = q = k: r = n1, s = n2, type I/II/III for
// marks 2/1/0. Throws unless p == q == k.
ExoticOrbitLabel closed_form_phi_pqk_equal(const MarkedTableau& t);

} // namespace exotic

#endif
