#include <degen/cohomology.hpp>

namespace degen {

namespace {

Int pos_part(const Int& n) { return n > 0 ? n : Int(0); }

void require_integral(const SurfaceClass& c) {
    if (!c.integral())
        throw std::invalid_argument("cohomology needs an integral class, got " + c.str());
}

void require_integral(const ThreefoldClass& t) {
    if (!t.integral())
        throw std::invalid_argument("cohomology needs an integral class, got " + t.str());
}

}  // namespace

std::string coh_str(const CohVec& h) {
    std::string s = "(";
    for (size_t i = 0; i < h.size(); ++i) {
        if (i) s += ",";
        s += int_str(h[i]);
    }
    return s + ")";
}

std::array<Int, 2> h_p1(const Int& d) { return {pos_part(d + 1), pos_part(-d - 1)}; }

SurfacePush pushforward_surface(const HirzebruchBase& base, const SurfaceClass& c) {
    require_integral(c);
    Int a = to_int(c.a), b = to_int(c.b);
    SurfacePush push;
    if (a >= 0) {
        // pr_*O(a,b) = Sym^a(O + O(-e)) (x) O(b)
        for (Int k = 0; k <= a; ++k) push.r0.push_back(b - k * base.e);
    } else if (a <= -2) {
        // relative duality against omega_pr = O(-2, -e)
        for (Int j = 1; j <= -a - 1; ++j) push.r1.push_back(b + j * base.e);
    }
    return push;
}

CohVec h_surface(const HirzebruchBase& base, const SurfaceClass& c) {
    SurfacePush push = pushforward_surface(base, c);
    CohVec h(3, Int(0));
    for (const Int& d : push.r0) {
        auto hp = h_p1(d);
        h[0] += hp[0];
        h[1] += hp[1];
    }
    for (const Int& d : push.r1) {
        auto hp = h_p1(d);
        h[1] += hp[0];
        h[2] += hp[1];
    }
    return h;
}

ThreefoldPush pushforward_threefold(const BundleThreefold& y, const ThreefoldClass& t) {
    require_integral(t);
    Int m = to_int(t.m);
    ThreefoldPush push;
    if (m >= 0) {
        // pi_*O(mE + pi^*A) = Sym^m(O + O(-d0)) (x) O(A)
        for (Int k = 0; k <= m; ++k) push.r0.push_back(t.pull - Rat(k) * y.d0);
    } else if (m <= -2) {
        // relative duality against omega_pi = O(-2E - pi^*d0)
        for (Int j = 1; j <= -m - 1; ++j) push.r1.push_back(t.pull + Rat(j) * y.d0);
    }
    return push;
}

CohVec h_threefold(const BundleThreefold& y, const ThreefoldClass& t) {
    ThreefoldPush push = pushforward_threefold(y, t);
    CohVec h(4, Int(0));
    for (const SurfaceClass& c : push.r0) {
        CohVec hs = h_surface(y.base, c);
        for (int i = 0; i < 3; ++i) h[i] += hs[i];
    }
    for (const SurfaceClass& c : push.r1) {
        CohVec hs = h_surface(y.base, c);
        for (int i = 0; i < 3; ++i) h[i + 1] += hs[i];
    }
    return h;
}

CohVec h_split(const HirzebruchBase& base, const std::vector<SurfaceClass>& summands,
               const SurfaceClass& twist) {
    CohVec h(3, Int(0));
    for (const SurfaceClass& c : summands) {
        CohVec hs = h_surface(base, c + twist);
        for (int i = 0; i < 3; ++i) h[i] += hs[i];
    }
    return h;
}

CohVec h_split(const BundleThreefold& y, const std::vector<ThreefoldClass>& summands,
               const ThreefoldClass& twist) {
    CohVec h(4, Int(0));
    for (const ThreefoldClass& t : summands) {
        CohVec ht = h_threefold(y, t + twist);
        for (int i = 0; i < 4; ++i) h[i] += ht[i];
    }
    return h;
}

Int lattice_h0(const HirzebruchBase& base, const SurfaceClass& c) {
    require_integral(c);
    Int a = to_int(c.a), b = to_int(c.b);
    // polytope of a*sigma + b*ell in the fan with rays
    // (1,0), (0,1), (-1,e), (0,-1):  x >= -b, y >= -a, x <= e*y, y <= 0
    Int count = 0;
    for (Int y = -a; y <= 0; ++y) {
        Int width = base.e * y + b + 1;  // x in [-b, e*y]
        count += pos_part(width);
    }
    return count;
}

Rat rr_chi(const HirzebruchBase& base, const SurfaceClass& c) {
    SurfaceClass k = canonical_surface(base);
    return rat(1) + surface_pair(base, c, c - k) / 2;
}

}  // namespace degen
