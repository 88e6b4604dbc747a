#include <degen/lesolve.hpp>

#include <algorithm>

namespace degen {

namespace {

using OptInt = std::optional<Int>;  // nullopt = +infinity

OptInt omin(const OptInt& x, const OptInt& y) {
    if (!x) return y;
    if (!y) return x;
    return std::min(*x, *y);
}

OptInt osub(const OptInt& x, const Int& k) {
    if (!x) return std::nullopt;
    return *x - k;
}

OptInt oadd(const OptInt& x, const OptInt& y) {
    if (!x || !y) return std::nullopt;
    return *x + *y;
}

bool leq(const Int& x, const OptInt& y) { return !y || x <= *y; }

void validate(const PartialVec& v, const char* which, size_t n) {
    if (v.size() != n) throw std::invalid_argument("sequence vectors must have equal length");
    for (const PartialDim& d : v) {
        if (d.lo < 0) throw std::invalid_argument(std::string(which) + ": negative dimension");
        if (d.hi && *d.hi < d.lo)
            throw std::invalid_argument(std::string(which) + ": empty interval");
    }
}

// Window of admissible s_i at degree i for connecting ranks r_{i-1} = rp
// and r_i = rc.  A choice of t_i exists for some s in the window iff the
// window is nonempty, which makes per-transition feasibility O(1).
struct SWindow {
    Int lo;
    OptInt hi;
    bool ok;  // false when rc already violates quot[i]
};

SWindow s_window(const PartialDim& A, const PartialDim& B, const PartialDim& C, const Int& rp,
                 const Int& rc) {
    SWindow w{Int(0), std::nullopt, true};
    if (!leq(rc, C.hi)) {
        w.ok = false;
        return w;
    }
    w.lo = std::max(Int(0), Int(A.lo - rp));
    if (C.hi) w.lo = std::max(w.lo, Int(B.lo - *C.hi + rc));
    w.hi = omin(osub(A.hi, rp), B.hi);
    if (B.hi) w.hi = omin(w.hi, OptInt(Int(*B.hi - C.lo + rc)));
    return w;
}

bool window_nonempty(const SWindow& w) { return w.ok && leq(w.lo, w.hi); }

struct EntryRange {
    Int lo;
    OptInt hi;
    bool seen = false;

    void absorb(const Int& l, const OptInt& h) {
        if (!seen) {
            lo = l;
            hi = h;
            seen = true;
            return;
        }
        lo = std::min(lo, l);
        if (!hi || !h)
            hi = std::nullopt;
        else
            hi = std::max(*hi, *h);
    }
};

}  // namespace

PartialVec known_vec(const std::vector<Int>& v) {
    PartialVec out;
    out.reserve(v.size());
    for (const Int& x : v) out.push_back(PartialDim::known(x));
    return out;
}

PartialVec unknown_vec(size_t n) { return PartialVec(n, PartialDim::unknown()); }

std::string partial_str(const PartialVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

PartialVec partial_sum(const PartialVec& x, const PartialVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("partial_sum: length mismatch");
    PartialVec out;
    out.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        PartialDim d;
        d.lo = x[i].lo + y[i].lo;
        if (x[i].hi && y[i].hi) d.hi = *x[i].hi + *y[i].hi;
        out.push_back(std::move(d));
    }
    return out;
}

bool all_points(const PartialVec& v) {
    return std::all_of(v.begin(), v.end(), [](const PartialDim& d) { return d.is_point(); });
}

std::vector<Int> points(const PartialVec& v) {
    std::vector<Int> out;
    out.reserve(v.size());
    for (const PartialDim& d : v) {
        if (!d.is_point()) throw std::invalid_argument("entry " + d.str() + " is not determined");
        out.push_back(d.lo);
    }
    return out;
}

SESSolution solve_ses(const SESProblem& p) {
    const size_t n = p.sub.size();
    if (n == 0) throw std::invalid_argument("empty sequence");
    validate(p.sub, "sub", n);
    validate(p.mid, "mid", n);
    validate(p.quot, "quot", n);

    // Rank slot j holds r_{j-1}, sitting between degrees j-1 and j.
    // Slots 0 and n are the zero maps bounding the sequence; inner slot j
    // is capped by r <= c_{j-1} and r <= a_j.
    std::vector<Int> cap(n + 1, Int(0));
    for (size_t j = 1; j < n; ++j) {
        OptInt c = omin(p.quot[j - 1].hi, p.sub[j].hi);
        if (!c)
            throw SolverLimit("connecting rank out of degree " + std::to_string(j - 1) +
                              " has no finite bound; constrain quot[" + std::to_string(j - 1) +
                              "] or sub[" + std::to_string(j) + "]");
        cap[j] = *c;
    }

    Int work = 0;
    for (size_t i = 0; i < n; ++i) work += (cap[i] + 1) * (cap[i + 1] + 1);
    if (work > 50000000)
        throw SolverLimit("rank sweep of size " + int_str(work) + " exceeds the solver guard");

    auto slot_size = [&](size_t j) { return static_cast<size_t>(cap[j].get_ui()) + 1; };
    auto feas = [&](size_t i, size_t rp, size_t rc) {
        return window_nonempty(s_window(p.sub[i], p.mid[i], p.quot[i], Int(rp), Int(rc)));
    };

    // reach[j][r]: degrees < j are solvable with r_{j-1} = r
    std::vector<std::vector<char>> reach(n + 1);
    reach[0] = {1};
    for (size_t i = 0; i < n; ++i) {
        reach[i + 1].assign(slot_size(i + 1), 0);
        for (size_t rp = 0; rp < reach[i].size(); ++rp) {
            if (!reach[i][rp]) continue;
            for (size_t rc = 0; rc < reach[i + 1].size(); ++rc)
                if (!reach[i + 1][rc] && feas(i, rp, rc)) reach[i + 1][rc] = 1;
        }
    }

    // ok[j][r]: degrees >= j are solvable entering with r_{j-1} = r
    std::vector<std::vector<char>> ok(n + 1);
    ok[n] = {1};
    for (size_t i = n; i-- > 0;) {
        ok[i].assign(slot_size(i), 0);
        for (size_t rp = 0; rp < ok[i].size(); ++rp) {
            for (size_t rc = 0; rc < ok[i + 1].size(); ++rc) {
                if (!ok[i + 1][rc]) continue;
                if (feas(i, rp, rc)) {
                    ok[i][rp] = 1;
                    break;
                }
            }
        }
    }

    SESSolution sol;
    sol.feasible = ok[0][0] != 0;
    if (!sol.feasible) return sol;

    std::vector<EntryRange> ra(n), rb(n), rq(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t rp = 0; rp < reach[i].size(); ++rp) {
            if (!reach[i][rp]) continue;
            for (size_t rc = 0; rc < ok[i + 1].size(); ++rc) {
                if (!ok[i + 1][rc]) continue;
                Int rp_i(rp), rc_i(rc);
                SWindow w = s_window(p.sub[i], p.mid[i], p.quot[i], rp_i, rc_i);
                if (!window_nonempty(w)) continue;

                // ranges of a_i = rp + s, c_i = t + rc, b_i = s + t over
                // all (s, t) admissible for this transition
                ra[i].absorb(rp_i + w.lo, oadd(OptInt(rp_i), w.hi));

                Int t_min = std::max(Int(0), Int(p.quot[i].lo - rc_i));
                if (w.hi) t_min = std::max(t_min, Int(p.mid[i].lo - *w.hi));
                OptInt t_max = omin(osub(p.mid[i].hi, w.lo), osub(p.quot[i].hi, rc_i));
                rq[i].absorb(rc_i + t_min, oadd(OptInt(rc_i), t_max));

                Int b_lo = std::max(p.mid[i].lo,
                                    Int(w.lo + std::max(Int(0), Int(p.quot[i].lo - rc_i))));
                OptInt b_hi = omin(p.mid[i].hi, oadd(w.hi, osub(p.quot[i].hi, rc_i)));
                rb[i].absorb(b_lo, b_hi);
            }
        }
    }

    auto pack = [&](std::vector<EntryRange>& r) {
        PartialVec v(n);
        for (size_t i = 0; i < n; ++i) {
            v[i].lo = r[i].lo;
            v[i].hi = r[i].hi;
        }
        return v;
    };
    sol.sub = pack(ra);
    sol.mid = pack(rb);
    sol.quot = pack(rq);
    return sol;
}

}  // namespace degen
