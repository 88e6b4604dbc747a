#ifndef DEGEN_MODELS_HPP
#define DEGEN_MODELS_HPP

// The two cone degenerations with P^1-bundle resolutions, as fixed data:
// their toric ray tables, branch divisors of the double covers, and the
// chained cohomology computations (tangent sheaf, twisted tangent, normal
// sheaf, final deformation table of the cover).
//
// Everything here is either computed exactly from the chow/cohomology
// kernels or is an explicitly tagged external fact; the two never mix
// silently.

#include <degen/chow.hpp>
#include <degen/cohomology.hpp>
#include <degen/lesolve.hpp>

#include <array>
#include <optional>

namespace degen {

enum class ModelKind { II, III };

const char* kind_name(ModelKind kind);
ModelKind kind_from(const std::string& name);

struct RayData {
    std::array<long, 3> gen;  // primitive generator in N = Z^3
    ThreefoldClass cls;       // divisor class of the corresponding toric divisor
};

struct DegenerationModel {
    ModelKind kind;
    BundleThreefold bundle;
    std::vector<RayData> rays;
};

// II: Y = P(O + O(-d0)) over F_0 with d0 = (2,2).
// III: same over F_2 with d0 = (2,4).
DegenerationModel model_data(ModelKind kind);

// Branch divisor of the degree-d1 double cover and its half.
// II:  B = (d1 + [d1 odd]) E + pi^*(2d1, 2d1)
// III: B = (d1 + [d1 odd]) E + pi^*(2d1, 4d1)
struct CoverSpec {
    ModelKind kind;
    long d1;
    bool odd;
    ThreefoldClass b;
    ThreefoldClass l;  // b = 2l
};
CoverSpec branch_class(ModelKind kind, long d1);

// (mE + pi^*A)|_E = A - m*d0 under O_E(E) = O(-d0).
SurfaceClass restrict_to_section(const BundleThreefold& y, const ThreefoldClass& t);

// (2d1+1)(2d1+2)(2d1+3)/6 = sum_{m=0}^{d1} (2m+1)^2, the section count of O(B).
Int big_n(long d1);
Int odd_square_sum(long d1);

// (d1-2)(d1-3)(d1-5)/den; den = 2 gives the full twisted h^3 for odd d1.
Rat twisted_form(long d1, long den);

// h(T_Y) from the toric Euler sequence 0 -> O^3 -> +O(D_rho) -> T_Y -> 0.
// Validates that the ray classes sum to -K_Y before solving; the solve is
// fully forced for both models.
CohVec euler_tangent(const DegenerationModel& model);

// h(T_Y (x) L^v) through the relative tangent sequence
//   0 -> Theta_{Y/T} (x) L^v -> T_Y (x) L^v -> pi^*T_T (x) L^v -> 0
// with Theta_{Y/T} = O(2E + pi^*d0).  The quotient is pushed to the base
// first (projection formula) and handled summand by summand: T_{F_0}
// splits, T_{F_2} needs one inner sequence per summand.  Entries that
// exactness cannot pin stay intervals.
struct TwistedTangent {
    PartialVec h;     // length 4
    CohVec rel;       // h(Theta_{Y/T} (x) L^v), exact
    PartialVec base;  // h(pi^*T_T (x) L^v)
};
TwistedTangent tangent_twisted(ModelKind kind, long d1);

// Pullback cohomology along the double cover: p_*p^*O(f) = O(f) + O(f-L).
struct CoverCohomology {
    CohVec invariant;  // h(O(f))
    CohVec anti;       // h(O(f-L))
    CohVec total;
};
CoverCohomology cover_cohomology(ModelKind kind, long d1, const ThreefoldClass& f);

// Rows of 0 -> O -> O(B) -> N_B -> 0; the quotient row is forced.
struct NormalSheafRows {
    CohVec h_o, h_ob, h_nb;
};
NormalSheafRows normal_sheaf_rows(ModelKind kind, long d1);

// A statement imported from outside the engine (not derivable from the
// exact-sequence bookkeeping here), pinning one entry of h(T_X).
struct ExternalFact {
    std::string id;
    std::string statement;
    size_t degree;
    Int value;
};
std::vector<ExternalFact> external_facts(ModelKind kind, long d1);

struct FactUse {
    ExternalFact fact;
    bool applied = false;     // pinned into the solve
    bool consistent = true;   // false: rejected, contradicts exactness
};

// The assembled deformation table for the double cover X -> Y:
//   0 -> T_X -> p^*T_Y -> p^*N_B -> 0
// with h(p^*T_Y) = h(T_Y) + h(T_Y (x) L^v) and the quotient row taken to
// be the branch-restriction row h(N_B) as displayed in the reference
// tables (no anti-invariant doubling; see audit notes).
struct FinalTable {
    ModelKind kind;
    long d1 = 0;
    CohVec t_y;
    TwistedTangent twisted;
    PartialVec cover_mid;  // h(T_Y) + twisted.h
    NormalSheafRows normal;
    PartialVec tx_exact;   // exactness alone
    PartialVec tx;         // consistent external facts pinned in
    std::vector<FactUse> facts;
    std::vector<std::string> audit;
};
FinalTable final_table(ModelKind kind, long d1);  // d1 >= 5

// h^1(T_X): closed form N - 17 (II), N - 16 / N - 17 (III odd/even),
// re-derived through the full chain; throws if the two disagree.
Int moduli_dimension(ModelKind kind, long d1);

// h^2(T_X): what exactness gives, what is asserted externally, and
// whether the two clash (they do for II at d1 = 6).
struct H2Assessment {
    PartialDim exactness;
    std::optional<Int> asserted;
    bool conflict = false;
};
H2Assessment h2_tx(ModelKind kind, long d1);

// Numerical invariants of the canonical threefold cover of degree d1:
// Vol = K^3 = 2(d1-4)^3 and p_g = h^0(K) = (d1-1)(d1-2)(d1-3)/6.
struct SurfaceInvariants {
    Int vol;
    Int pg;
};
SurfaceInvariants invariants(long d1);  // d1 >= 5

}  // namespace degen

#endif
