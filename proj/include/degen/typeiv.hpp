#ifndef DEGEN_TYPEIV_HPP
#define DEGEN_TYPEIV_HPP

// Divisor ledger for the fourth cone degeneration and its birational
// models.  The geometry (weighted blowups, conic bundle structure) is out
// of scope; what is fully checkable is the Q-linear algebra of the stored
// pullback expansions, and the parity obstruction for branch divisors.

#include <degen/check.hpp>
#include <degen/rational.hpp>

#include <vector>

namespace degen {

enum class BasisId { y_tilde, y_prime, y_one };

struct DivisorBasis {
    BasisId id;
    std::string name;
    std::vector<std::string> elements;
};

const DivisorBasis& basis(BasisId id);

struct DivisorVector {
    BasisId basis_id;
    std::vector<Rat> coords;

    DivisorVector(BasisId b, std::vector<Rat> c);

    DivisorVector operator+(const DivisorVector& o) const;
    friend DivisorVector operator*(const Rat& s, const DivisorVector& v);
    bool operator==(const DivisorVector& o) const;
    std::string str() const;
};

// Columns stored verbatim from the reference expansions; apply() is plain
// matrix-vector multiplication over Q.
struct PullbackMap {
    BasisId from, to;
    std::vector<std::vector<Rat>> columns;  // one column per `from` element

    DivisorVector apply(const DivisorVector& v) const;
};

// tau: Ytilde -> Y' contraction; tau^* expands Y' divisors in the Ytilde basis:
//   tau^*F    = F
//   tau^*D'   = Dt + (1/2)E2 + S + (1/2)E3 + E4
//   tau^*E'_1 = E1 + E2 + S + (1/2)E3 + (1/2)E4
const PullbackMap& tau_pullback();

// Stored anticanonical vectors: -K_Ytilde = (12,4,6,2,4,3,5),
// -K_Y' = (12,4,2), -K_Y1 = (12,4,6).
DivisorVector anti_canonical(BasisId id);

// phi^*H = 3F + D' + (1/2)E'_1 and psi^*H = 3F + D_1 + (3/2)Sigma_1 for
// the hyperplane class H downstairs.
DivisorVector phi_h();
DivisorVector psi_h();

// Display-only: the central model has -K = 6*Sigma + 12*F; no operations
// use that basis.
const char* y0_anticanonical_display();

// tau^*(-K_Y') must reproduce -K_Ytilde coordinate by coordinate (the
// contraction is crepant).  One check per basis element; never throws.
std::vector<Check> verify_crepant_tau();

// 4*phi^*H = -K_Y' and 4*psi^*H = -K_Y1, since -K = 4H on a degeneration
// of P^3.  One check per coordinate of each basis.
std::vector<Check> verify_hyperplane();

// A branch divisor of degree d meets each conic fiber in d/2 points; the
// double-line component forces that count to be even, so only d in 4Z
// survives.
struct Parity {
    bool admissible;
    Rat fiber_points;
};
Parity parity_admissible(long d);  // d >= 4

// Qualitative facts asserted for admissible degrees (taken on faith, not
// computed): smooth branch, avoids the singular point, pencil structure.
// Empty when the parity test already rules d out.
struct TaggedFact {
    std::string id;
    std::string statement;
};
std::vector<TaggedFact> singularity_membership(long d);  // d >= 4

}  // namespace degen

#endif
