#include <degen/models.hpp>

namespace degen {

namespace {

// pullback classes are written in the (Sigma1, Sigma0) = (section, fiber) basis
ThreefoldClass pull_only(long a, long b) { return {0, SurfaceClass(a, b)}; }

void require_d1(long d1, long min) {
    if (d1 < min)
        throw std::domain_error("d1 must be >= " + std::to_string(min) + ", got " +
                                std::to_string(d1));
}

// h(T_{F_e} (x) O(c)) for the base surface of the model.  T_{F_0} splits
// as O(2,0) + O(0,2); T_{F_2} is solved through
//   0 -> O((2,2)+c) -> T_{F_2}(c) -> O((0,2)+c) -> 0.
PartialVec base_tangent_h(ModelKind kind, const SurfaceClass& c) {
    if (kind == ModelKind::II) {
        HirzebruchBase f0(0);
        return known_vec(h_split(f0, {SurfaceClass(2, 0), SurfaceClass(0, 2)}, c));
    }
    HirzebruchBase f2(2);
    SESProblem p;
    p.sub = known_vec(h_surface(f2, SurfaceClass(2, 2) + c));
    p.mid = unknown_vec(3);
    p.quot = known_vec(h_surface(f2, SurfaceClass(0, 2) + c));
    SESSolution sol = solve_ses(p);
    if (!sol.feasible) throw SolveError("surface tangent sequence infeasible");
    return sol.mid;
}

}  // namespace

const char* kind_name(ModelKind kind) { return kind == ModelKind::II ? "II" : "III"; }

ModelKind kind_from(const std::string& name) {
    if (name == "II" || name == "ii" || name == "2") return ModelKind::II;
    if (name == "III" || name == "iii" || name == "3") return ModelKind::III;
    throw std::invalid_argument("unknown model type: " + name);
}

DegenerationModel model_data(ModelKind kind) {
    if (kind == ModelKind::II) {
        BundleThreefold y{HirzebruchBase(0), SurfaceClass(2, 2)};
        ThreefoldClass e_cls{1, SurfaceClass(0, 0)};
        return {kind,
                y,
                {
                    {{1, 0, 2}, pull_only(0, 1)},    // Sigma0
                    {{0, 1, 2}, pull_only(1, 0)},    // Sigma1
                    {{-1, 0, 0}, pull_only(0, 1)},   // Sigma0
                    {{0, -1, 0}, pull_only(1, 0)},   // Sigma1
                    {{0, 0, 1}, e_cls},              // E
                    {{0, 0, -1}, {1, SurfaceClass(2, 2)}},  // E + 2Sigma1 + 2Sigma0
                }};
    }
    BundleThreefold y{HirzebruchBase(2), SurfaceClass(2, 4)};
    ThreefoldClass e_cls{1, SurfaceClass(0, 0)};
    return {kind,
            y,
            {
                {{1, 0, 4}, pull_only(0, 1)},    // Sigma0
                {{0, 1, 2}, pull_only(1, 0)},    // Sigma1
                {{-1, 2, 0}, pull_only(0, 1)},   // Sigma0
                {{0, -1, 0}, pull_only(1, 2)},   // Sigma1 + 2Sigma0
                {{0, 0, 1}, e_cls},              // E
                {{0, 0, -1}, {1, SurfaceClass(2, 4)}},  // E + 2Sigma1 + 4Sigma0
            }};
}

CoverSpec branch_class(ModelKind kind, long d1) {
    require_d1(d1, 1);
    bool odd = (d1 % 2) != 0;
    long m = d1 + (odd ? 1 : 0);
    long fiber_deg = (kind == ModelKind::II) ? 2 * d1 : 4 * d1;
    ThreefoldClass b{m, SurfaceClass(2 * d1, fiber_deg)};
    ThreefoldClass l{m / 2, SurfaceClass(d1, fiber_deg / 2)};
    return {kind, d1, odd, b, l};
}

SurfaceClass restrict_to_section(const BundleThreefold& y, const ThreefoldClass& t) {
    return t.pull - t.m * y.d0;
}

Int big_n(long d1) {
    Int n(2 * d1 + 1);
    return n * (n + 1) * (n + 2) / 6;
}

Int odd_square_sum(long d1) {
    Int total = 0;
    for (long m = 0; m <= d1; ++m) total += Int(2 * m + 1) * Int(2 * m + 1);
    return total;
}

Rat twisted_form(long d1, long den) {
    return rat(Int(d1 - 2) * Int(d1 - 3) * Int(d1 - 5), Int(den));
}

CohVec euler_tangent(const DegenerationModel& model) {
    ThreefoldClass sum{0, SurfaceClass(0, 0)};
    std::vector<ThreefoldClass> classes;
    for (const RayData& ray : model.rays) {
        sum = sum + ray.cls;
        classes.push_back(ray.cls);
    }
    ThreefoldClass anti_k = -canonical_threefold(model.bundle);
    if (!(sum == anti_k))
        throw std::invalid_argument("ray classes sum to " + sum.str() + ", expected " +
                                    anti_k.str());

    CohVec triv = h_threefold(model.bundle, ThreefoldClass{0, SurfaceClass(0, 0)});
    CohVec sub(4);
    for (int i = 0; i < 4; ++i) sub[i] = 3 * triv[i];

    SESProblem p;
    p.sub = known_vec(sub);
    p.mid = known_vec(h_split(model.bundle, classes, ThreefoldClass{0, SurfaceClass(0, 0)}));
    p.quot = unknown_vec(4);
    SESSolution sol = solve_ses(p);
    if (!sol.feasible) throw SolveError("Euler sequence dimensions are infeasible");
    return points(sol.quot);
}

TwistedTangent tangent_twisted(ModelKind kind, long d1) {
    DegenerationModel model = model_data(kind);
    const BundleThreefold& y = model.bundle;
    CoverSpec cover = branch_class(kind, d1);

    TwistedTangent out;
    out.rel = h_threefold(y, ThreefoldClass{2, y.d0} - cover.l);

    // push L^v to the base and twist T_T by each summand
    ThreefoldPush push = pushforward_threefold(y, -cover.l);
    out.base = known_vec(CohVec(4, Int(0)));
    for (const SurfaceClass& c : push.r0) {
        PartialVec h = base_tangent_h(kind, c);
        h.push_back(PartialDim::known(Int(0)));  // pad to threefold length
        out.base = partial_sum(out.base, h);
    }
    for (const SurfaceClass& c : push.r1) {
        PartialVec h = base_tangent_h(kind, c);
        h.insert(h.begin(), PartialDim::known(Int(0)));  // degree shift
        out.base = partial_sum(out.base, h);
    }

    SESProblem p;
    p.sub = known_vec(out.rel);
    p.mid = unknown_vec(4);
    p.quot = out.base;
    SESSolution sol = solve_ses(p);
    if (!sol.feasible) throw SolveError("twisted tangent sequence infeasible");
    out.h = sol.mid;
    return out;
}

CoverCohomology cover_cohomology(ModelKind kind, long d1, const ThreefoldClass& f) {
    DegenerationModel model = model_data(kind);
    CoverSpec cover = branch_class(kind, d1);
    CoverCohomology out;
    out.invariant = h_threefold(model.bundle, f);
    out.anti = h_threefold(model.bundle, f - cover.l);
    out.total.resize(4);
    for (int i = 0; i < 4; ++i) out.total[i] = out.invariant[i] + out.anti[i];
    return out;
}

NormalSheafRows normal_sheaf_rows(ModelKind kind, long d1) {
    DegenerationModel model = model_data(kind);
    CoverSpec cover = branch_class(kind, d1);
    NormalSheafRows rows;
    rows.h_o = h_threefold(model.bundle, ThreefoldClass{0, SurfaceClass(0, 0)});
    rows.h_ob = h_threefold(model.bundle, cover.b);

    SESProblem p;
    p.sub = known_vec(rows.h_o);
    p.mid = known_vec(rows.h_ob);
    p.quot = unknown_vec(4);
    SESSolution sol = solve_ses(p);
    if (!sol.feasible) throw SolveError("normal sheaf sequence infeasible");
    rows.h_nb = points(sol.quot);
    return rows;
}

std::vector<ExternalFact> external_facts(ModelKind kind, long d1) {
    std::vector<ExternalFact> facts;
    facts.push_back({"tx-h0-vanishing",
                     "h0(T_X) = 0: the cover is of general type with no vector fields", 0,
                     Int(0)});
    if (kind == ModelKind::II) {
        bool odd = (d1 % 2) != 0;
        facts.push_back({"tx-h2-asserted",
                         std::string("h2(T_X) = ") + (odd ? "0" : "1") +
                             " asserted for the type II cover",
                         2, Int(odd ? 0 : 1)});
    } else if (d1 == 5) {
        facts.push_back(
            {"tx-h2-asserted", "h2(T_X) = 2 asserted for the type III cover at d1 = 5", 2,
             Int(2)});
    }
    return facts;
}

FinalTable final_table(ModelKind kind, long d1) {
    require_d1(d1, 5);
    FinalTable t;
    t.kind = kind;
    t.d1 = d1;
    t.t_y = euler_tangent(model_data(kind));
    t.twisted = tangent_twisted(kind, d1);
    t.cover_mid = partial_sum(known_vec(t.t_y), t.twisted.h);
    t.normal = normal_sheaf_rows(kind, d1);

    SESProblem p;
    p.sub = unknown_vec(4);
    p.mid = t.cover_mid;
    p.quot = known_vec(t.normal.h_nb);
    SESSolution exact = solve_ses(p);
    if (!exact.feasible) throw SolveError("final deformation sequence infeasible");
    t.tx_exact = exact.sub;

    // pin external facts one at a time, dropping any that contradict the
    // exact-sequence constraints
    SESProblem pinned = p;
    for (const ExternalFact& fact : external_facts(kind, d1)) {
        SESProblem trial = pinned;
        PartialDim& slot = trial.sub[fact.degree];
        slot.lo = std::max(slot.lo, fact.value);
        slot.hi = slot.hi ? std::min(*slot.hi, fact.value) : fact.value;
        FactUse use{fact, false, true};
        if (slot.hi && *slot.hi < slot.lo) {
            use.consistent = false;
        } else {
            SESSolution trial_sol = solve_ses(trial);
            if (trial_sol.feasible) {
                pinned = trial;
                use.applied = true;
            } else {
                use.consistent = false;
            }
        }
        if (!use.consistent) {
            t.audit.push_back("external fact " + fact.id + " (value " + int_str(fact.value) +
                              " in degree " + std::to_string(fact.degree) +
                              ") contradicts exactness; computed row forces " +
                              t.tx_exact[fact.degree].str() + " at d1 = " + std::to_string(d1) +
                              "; the fact was not applied");
        }
        t.facts.push_back(use);
    }
    SESSolution sol = solve_ses(pinned);
    if (!sol.feasible) throw SolveError("final deformation sequence infeasible with facts");
    t.tx = sol.sub;

    if (kind == ModelKind::II && (d1 % 2) != 0) {
        // the reference splits the twisted h^3 total into two closed-form
        // pieces; the direct pushforward gives other pieces with the same
        // sum, so always record the comparison
        Rat direct_rel(t.twisted.rel[3]);
        Rat direct_base(t.twisted.base[3].lo);
        Rat form_rel = twisted_form(d1, 6);
        Rat form_base = twisted_form(d1, 3);
        std::string head =
            "twisted tangent pieces at d1 = " + std::to_string(d1) + ": direct h3 values are " +
            rat_str(direct_rel) + " (relative) and " + rat_str(direct_base) +
            " (base); the quoted per-piece forms are (d1-2)(d1-3)(d1-5)/6 = " +
            rat_str(form_rel) + " and (d1-2)(d1-3)(d1-5)/3 = " + rat_str(form_base);
        if (direct_rel != form_rel || direct_base != form_base) {
            t.audit.push_back(head + "; the pieces differ, only the total (d1-2)(d1-3)(d1-5)/2 = " +
                              rat_str(twisted_form(d1, 2)) + " is reproduced");
        } else {
            t.audit.push_back(head + "; pieces and total agree");
        }
    }
    t.audit.push_back(
        "the quotient row of the final sequence is the branch-restriction row h(N_B) as "
        "displayed; the anti-invariant summand of the pushed-forward normal sheaf is not "
        "added, since its accounting in the reference tables is unresolved");
    return t;
}

Int moduli_dimension(ModelKind kind, long d1) {
    require_d1(d1, 5);
    bool odd = (d1 % 2) != 0;
    Int closed = big_n(d1) - ((kind == ModelKind::II) ? 17 : (odd ? 16 : 17));
    FinalTable t = final_table(kind, d1);
    if (!t.tx[1].is_point() || t.tx[1].lo != closed)
        throw SolveError("moduli dimension mismatch: chain gives " + t.tx[1].str() +
                         ", closed form gives " + int_str(closed));
    return closed;
}

H2Assessment h2_tx(ModelKind kind, long d1) {
    FinalTable t = final_table(kind, d1);
    H2Assessment out;
    out.exactness = t.tx_exact[2];
    for (const FactUse& use : t.facts) {
        if (use.fact.degree == 2) {
            out.asserted = use.fact.value;
            out.conflict = !use.consistent;
        }
    }
    return out;
}

SurfaceInvariants invariants(long d1) {
    require_d1(d1, 5);
    Int k(d1 - 4);
    return {2 * k * k * k, Int(d1 - 1) * Int(d1 - 2) * Int(d1 - 3) / 6};
}

}  // namespace degen
