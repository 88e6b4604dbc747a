#ifndef DEGEN_COHOMOLOGY_HPP
#define DEGEN_COHOMOLOGY_HPP

// Sheaf cohomology of line bundles on F_e and on P^1-bundle threefolds
// over F_e, computed by pushing forward to P^1 (resp. to F_e) and summing
// fiberwise contributions.  The higher direct image in the negative range
// comes from relative duality for the projection, so every value here is
// an exact integer.

#include <degen/chow.hpp>
#include <degen/rational.hpp>

#include <array>
#include <vector>

namespace degen {

// Cohomology dimensions, degree 0 upward.  Length 2 on P^1, 3 on a
// surface, 4 on a threefold.
using CohVec = std::vector<Int>;

std::string coh_str(const CohVec& h);

// O(d) on P^1: (h^0, h^1) = (max(d+1, 0), max(-d-1, 0)).
std::array<Int, 2> h_p1(const Int& d);

// pr_* and R^1 pr_* of O(a*sigma + b*ell) along pr: F_e -> P^1, as multisets
// of P^1 degrees.  a >= 0 gives Sym^a(O + O(-e)) (x) O(b); a <= -2 is the
// dual range; a = -1 kills both.
struct SurfacePush {
    std::vector<Int> r0, r1;
};
SurfacePush pushforward_surface(const HirzebruchBase& base, const SurfaceClass& c);

// (h^0, h^1, h^2) on F_e via the P^1 pushforward (Leray degenerates).
CohVec h_surface(const HirzebruchBase& base, const SurfaceClass& c);

// pi_* and R^1 pi_* of O(m*E + pi^*A) along pi: Y -> F_e, as multisets of
// surface classes: m >= 0 gives {A - k*d0 : 0 <= k <= m}, m <= -2 gives
// {A + j*d0 : 1 <= j <= -m-1}.
struct ThreefoldPush {
    std::vector<SurfaceClass> r0, r1;
};
ThreefoldPush pushforward_threefold(const BundleThreefold& y, const ThreefoldClass& t);

// (h^0, ..., h^3) on Y via the surface pushforward.
CohVec h_threefold(const BundleThreefold& y, const ThreefoldClass& t);

// Direct sums, twisted by a common class: h(+_i O(c_i) (x) O(twist)).
CohVec h_split(const HirzebruchBase& base, const std::vector<SurfaceClass>& summands,
               const SurfaceClass& twist);
CohVec h_split(const BundleThreefold& y, const std::vector<ThreefoldClass>& summands,
               const ThreefoldClass& twist);

// Independent h^0 oracle: counts lattice points of the divisor polytope of
// a*sigma + b*ell in the standard fan of F_e, never looking at the
// pushforward.  Agreement with h_surface[0] is a test invariant.
Int lattice_h0(const HirzebruchBase& base, const SurfaceClass& c);

// Riemann-Roch on F_e: chi(O(c)) = 1 + c.(c - K)/2.
Rat rr_chi(const HirzebruchBase& base, const SurfaceClass& c);

}  // namespace degen

#endif
