#pragma once

#include "squiral/lattice_patch.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace squiral {

// Sliding 2x2 product map: (psi w)(m,n) = w(m,n) w(m+1,n) w(m,n+1) w(m+1,n+1).
// The image patch is one cell shorter per axis. Invariant under global flip.
LatticePatch psi(const LatticePatch& patch);

// The inflation induced by psi on the squiral factor: each cell a maps to a
// 3x3 block with -1 at (r,s) in {0,1}^2, +1 at (2,0),(2,1),(0,2),(1,2), and
// a itself at (2,2) (axis order matches the block-map convention).
LatticePatch induced_substitute(const LatticePatch& factor_patch);

// Which of the two fixed points of the induced inflation is in use; they
// differ only in the sign attached to the orbit of (-1,-1).
enum class ModelSetBranch { A_plus_nonempty, A_minus_nonempty };

// Membership of (m,n) in Lambda_+ (sign = +1) or Lambda_- (sign = -1):
// iterated base-3 descent through the residue classes
//   S+ = {(2,0),(0,2),(2,1),(1,2)},  S- = {(0,0),(1,0),(0,1),(1,1)},
// recursing on (m,n) == (2,2) mod 3 and resolving the fixed point (-1,-1)
// by branch. Exactly one of the two signs holds at every point.
bool lambda_membership(Int m, Int n, int sign, ModelSetBranch branch);

struct FiberReport {
    int samples = 0;
    int exactly_two = 0;
    int more_than_two = 0;
    int min_preimages = 0;
    int max_preimages = 0;
    // Every preimage set contains the global sign flip of each of its
    // members (psi(-w) = psi(w)); false would indicate a scan artefact.
    bool flip_closed = true;
    double fraction_exactly_two = 0.0;
};

// Empirical preimage statistics of psi: sample square windows of the factor
// image and count the distinct source patterns above each of them.
FiberReport fiber_statistics(const LatticePatch& patch, Int window, int samples,
                             std::uint64_t rng_seed = 0x5eed);

// Documented metadata: the factor's pure-point diffraction is supported on
// the 3-adic Fourier module (Z[1/3] x Z[1/3]); not computed here.
inline const char* factor_fourier_module() { return "Z[1/3] x Z[1/3]"; }

} // namespace squiral
