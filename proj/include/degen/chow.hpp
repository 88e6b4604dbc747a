#ifndef DEGEN_CHOW_HPP
#define DEGEN_CHOW_HPP

// Intersection theory on Hirzebruch surfaces F_e and on P^1-bundle
// threefolds Y = P(O + O(-D0)) over them.
//
// Conventions, fixed once and used everywhere:
//   * A surface class (a, b) means a*sigma + b*ell, where sigma is the
//     NEGATIVE section (sigma^2 = -e) and ell a fiber (sigma.ell = 1,
//     ell^2 = 0).
//   * A threefold class (m, A) means m*E + pi^*A, where E is the section
//     of Y -> F_e with O_E(E) = O(-D0).  All products reduce through
//     E|_E = -D0.

#include <degen/rational.hpp>

#include <string>
#include <vector>

namespace degen {

struct HirzebruchBase {
    long e = 0;

    explicit HirzebruchBase(long e_) : e(e_) {
        if (e < 0) throw std::invalid_argument("Hirzebruch index must be >= 0");
    }
};

struct SurfaceClass {
    Rat a, b;  // a*sigma + b*ell

    SurfaceClass() : a(0), b(0) {}
    SurfaceClass(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    SurfaceClass(long a_, long b_) : a(a_), b(b_) {}

    bool integral() const { return is_integral(a) && is_integral(b); }
    bool operator==(const SurfaceClass& o) const { return a == o.a && b == o.b; }

    SurfaceClass operator+(const SurfaceClass& o) const { return {a + o.a, b + o.b}; }
    SurfaceClass operator-(const SurfaceClass& o) const { return {a - o.a, b - o.b}; }
    SurfaceClass operator-() const { return {-a, -b}; }
    friend SurfaceClass operator*(const Rat& s, const SurfaceClass& c) {
        return {s * c.a, s * c.b};
    }

    std::string str() const { return "(" + rat_str(a) + "," + rat_str(b) + ")"; }
};

// Y = P(O + O(-d0)) over F_e.  d0 must be an honest divisor class.
struct BundleThreefold {
    HirzebruchBase base;
    SurfaceClass d0;

    BundleThreefold(HirzebruchBase base_, SurfaceClass d0_) : base(base_), d0(std::move(d0_)) {
        if (!d0.integral())
            throw std::invalid_argument("bundle threefold needs an integral twisting class");
    }
};

struct ThreefoldClass {
    Rat m;              // coefficient of E
    SurfaceClass pull;  // pi^* part

    ThreefoldClass() : m(0) {}
    ThreefoldClass(Rat m_, SurfaceClass pull_) : m(std::move(m_)), pull(std::move(pull_)) {}
    ThreefoldClass(long m_, SurfaceClass pull_) : m(m_), pull(std::move(pull_)) {}

    bool integral() const { return is_integral(m) && pull.integral(); }
    bool operator==(const ThreefoldClass& o) const { return m == o.m && pull == o.pull; }

    ThreefoldClass operator+(const ThreefoldClass& o) const { return {m + o.m, pull + o.pull}; }
    ThreefoldClass operator-(const ThreefoldClass& o) const { return {m - o.m, pull - o.pull}; }
    ThreefoldClass operator-() const { return {-m, -pull}; }
    friend ThreefoldClass operator*(const Rat& s, const ThreefoldClass& c) {
        return {s * c.m, s * c.pull};
    }

    std::string str() const { return rat_str(m) + "E+pi*" + pull.str(); }
};

// c1.c2 on F_e:  a1*a2*(-e) + a1*b2 + a2*b1.
Rat surface_pair(const HirzebruchBase& base, const SurfaceClass& c1, const SurfaceClass& c2);

// K_{F_e} = -2*sigma - (e+2)*ell.
SurfaceClass canonical_surface(const HirzebruchBase& base);

// Triple product on Y.  Expands (m_i E + pi^* A_i) with E^3 = d0.d0,
// E^2.pi^*A = (-d0).A, E.pi^*A.pi^*B = A.B and pi^* triples = 0.
Rat triple(const BundleThreefold& y, const ThreefoldClass& t1, const ThreefoldClass& t2,
           const ThreefoldClass& t3);

// K_Y = -2E + pi^*(K_{F_e} - d0).
ThreefoldClass canonical_threefold(const BundleThreefold& y);

// Positivity of D = a*sigma + b*ell on F_e.
bool surface_nef_big(long a, long b, long e);
bool surface_ample(long a, long b, long e);

// Log discrepancies of the cone over (F_e, D): K_V = f^*K_W + c*Sigma + d*p^*sigma
// with c = (2-a)/a always and d = (2-e)/e exactly when D is nef-and-big but
// not ample (the scroll case).  Rejects classes that are not nef and big.
struct ConeData {
    Rat c;
    Rat d;
    bool ample;
};
ConeData cone_discrepancy(long a, long b, long e);

// (-K_W)^3 for the cone, computed by expanding
//   -f^*K_W = ((a+2)/a)*Sigma + p^*((a+2+d)*sigma + (b+e+2)*ell)
// through `triple`.  This is the primary evaluation path.
Rat anticanonical_cube_expanded(long a, long b, long e);

// Same number from the two closed forms:
//   ample:      ((a+2)^2/a^2) * (-a^2 e + 2ab + ae - 2b + 6a)
//   non-ample:  ((a+2)/(ae))  * (a^2 e^2 + a e^2 + e^2 + 6ae + 12)
// Kept as an independent expression for cross-checking the expansion.
Rat anticanonical_cube_closed(long a, long b, long e);

enum class NefKind { ample, non_ample };

struct ConeSolution {
    long a, b, e;
    NefKind kind;

    bool operator==(const ConeSolution& o) const {
        return a == o.a && b == o.b && e == o.e && kind == o.kind;
    }
};

// All nef-and-big (a, b, e) in the sub-box a in [a_lo, a_hi] of the search
// box below whose cone has (-K_W)^3 = 64.  Factored out so a caller may
// split the a-range into independent shards; results depend only on the
// box, not on the split.
std::vector<ConeSolution> classify_in_box(long a_lo, long a_hi, long max_e, long max_b);

struct ClassifyOutcome {
    std::vector<ConeSolution> solutions;  // sorted by (a, b, e)
    bool boundary_hit = false;            // some solution touches the box walls
};

// Search box: 1 <= a <= max_a, 0 <= e <= max_e, and b from ae (e > 0) or 1
// (e = 0) up to ae + max_b.  With the default bounds (64, 16, 128) the
// anticanonical degree 64 picks out three cones: (2,2,0) and (2,3,1) on the
// ample side (at a = 2 the cube collapses to 8(b - e + 6)) and the scroll
// cone (2,4,2).
ClassifyOutcome classify_degenerations(long max_a = 64, long max_e = 16, long max_b = 128);

}  // namespace degen

#endif
