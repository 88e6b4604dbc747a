#include <degen/chow.hpp>

#include <algorithm>
#include <tuple>

namespace degen {

Rat surface_pair(const HirzebruchBase& base, const SurfaceClass& c1, const SurfaceClass& c2) {
    // sigma^2 = -e, sigma.ell = 1, ell^2 = 0
    return c1.a * c2.a * rat(-base.e) + c1.a * c2.b + c2.a * c1.b;
}

SurfaceClass canonical_surface(const HirzebruchBase& base) {
    return {rat(-2), rat(-(base.e + 2))};
}

Rat triple(const BundleThreefold& y, const ThreefoldClass& t1, const ThreefoldClass& t2,
           const ThreefoldClass& t3) {
    const HirzebruchBase& base = y.base;
    const SurfaceClass& d0 = y.d0;

    Rat cube = t1.m * t2.m * t3.m * surface_pair(base, d0, d0);

    // E^2 terms carry one pulled-back factor each: E^2.pi^*A = (-d0).A.
    Rat sq = t1.m * t2.m * surface_pair(base, -d0, t3.pull) +
             t1.m * t3.m * surface_pair(base, -d0, t2.pull) +
             t2.m * t3.m * surface_pair(base, -d0, t1.pull);

    // E.pi^*A.pi^*B = A.B; pi^*A.pi^*B.pi^*C = 0.
    Rat lin = t1.m * surface_pair(base, t2.pull, t3.pull) +
              t2.m * surface_pair(base, t1.pull, t3.pull) +
              t3.m * surface_pair(base, t1.pull, t2.pull);

    return cube + sq + lin;
}

ThreefoldClass canonical_threefold(const BundleThreefold& y) {
    return {rat(-2), canonical_surface(y.base) - y.d0};
}

bool surface_nef_big(long a, long b, long e) {
    if (a <= 0) return false;
    if (b < a * e) return false;
    if (e == 0 && b <= 0) return false;  // b = 0 is nef but not big on F_0
    return true;
}

bool surface_ample(long a, long b, long e) { return surface_nef_big(a, b, e) && b > a * e; }

ConeData cone_discrepancy(long a, long b, long e) {
    if (e < 0) throw std::invalid_argument("Hirzebruch index must be >= 0");
    if (!surface_nef_big(a, b, e))
        throw std::domain_error("cone base class must be nef and big");
    ConeData out;
    out.ample = surface_ample(a, b, e);
    out.c = rat(2 - a, a);
    out.d = out.ample ? rat(0) : rat(2 - e, e);  // non-ample forces e > 0
    return out;
}

Rat anticanonical_cube_expanded(long a, long b, long e) {
    ConeData cone = cone_discrepancy(a, b, e);
    BundleThreefold y{HirzebruchBase(e), SurfaceClass(a, b)};
    // -f^*K_W = ((a+2)/a) E + pi^*((a+2+d) sigma + (b+e+2) ell)
    ThreefoldClass k{rat(a + 2, a), SurfaceClass(rat(a + 2) + cone.d, rat(b + e + 2))};
    return triple(y, k, k, k);
}

Rat anticanonical_cube_closed(long a, long b, long e) {
    ConeData cone = cone_discrepancy(a, b, e);
    if (cone.ample) {
        Rat lead = rat((a + 2) * (a + 2), a * a);
        return lead * rat(-a * a * e + 2 * a * b + a * e - 2 * b + 6 * a);
    }
    Rat lead = rat(a + 2, a * e);
    return lead * rat(a * a * e * e + a * e * e + e * e + 6 * a * e + 12);
}

std::vector<ConeSolution> classify_in_box(long a_lo, long a_hi, long max_e, long max_b) {
    std::vector<ConeSolution> hits;
    const Rat target = rat(64);
    for (long a = std::max(a_lo, 1L); a <= a_hi; ++a) {
        for (long e = 0; e <= max_e; ++e) {
            long b_lo = (e > 0) ? a * e : 1;
            for (long b = b_lo; b <= a * e + max_b; ++b) {
                if (anticanonical_cube_expanded(a, b, e) == target) {
                    hits.push_back({a, b, e,
                                    surface_ample(a, b, e) ? NefKind::ample : NefKind::non_ample});
                }
            }
        }
    }
    return hits;
}

ClassifyOutcome classify_degenerations(long max_a, long max_e, long max_b) {
    ClassifyOutcome out;
    out.solutions = classify_in_box(1, max_a, max_e, max_b);
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const ConeSolution& x, const ConeSolution& y) {
                  return std::tie(x.a, x.b, x.e) < std::tie(y.a, y.b, y.e);
              });
    for (const ConeSolution& s : out.solutions) {
        if (s.a == max_a || s.e == max_e || s.b == s.a * s.e + max_b) {
            out.boundary_hit = true;
            break;
        }
    }
    return out;
}

}  // namespace degen
