#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <degen/cohomology.hpp>
#include <degen/models.hpp>

#include <algorithm>
#include <string>

using namespace degen;

namespace {

CohVec vec(std::initializer_list<long> xs) {
    CohVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

bool entry_is(const PartialDim& d, long v) { return d.is_point() && d.lo == v; }

bool entry_is(const PartialDim& d, long lo, long hi) {
    return d.lo == lo && d.hi && *d.hi == hi;
}

bool has_note(const std::vector<std::string>& notes, const std::string& needle) {
    return std::any_of(notes.begin(), notes.end(), [&](const std::string& n) {
        return n.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("model data is a consistent fan") {
    for (ModelKind kind : {ModelKind::II, ModelKind::III}) {
        DegenerationModel m = model_data(kind);
        CHECK(m.rays.size() == 6);
        // Ray classes sum to the anticanonical class; euler_tangent
        // revalidates this internally and would throw otherwise.
        ThreefoldClass sum(0, SurfaceClass(0, 0));
        for (const RayData& r : m.rays) sum = sum + r.cls;
        CHECK(sum == -canonical_threefold(m.bundle));
    }
    CHECK(model_data(ModelKind::II).bundle.base.e == 0);
    CHECK(model_data(ModelKind::III).bundle.base.e == 2);
    CHECK(kind_from("II") == ModelKind::II);
    CHECK(kind_from("III") == ModelKind::III);
    CHECK_THROWS_AS(kind_from("IV"), std::invalid_argument);
}

TEST_CASE("branch classes halve") {
    CoverSpec b25 = branch_class(ModelKind::II, 5);
    CHECK(b25.odd);
    CHECK(b25.b == ThreefoldClass(6, SurfaceClass(10, 10)));
    CHECK(b25.l == ThreefoldClass(3, SurfaceClass(5, 5)));

    CoverSpec b35 = branch_class(ModelKind::III, 5);
    CHECK(b35.b == ThreefoldClass(6, SurfaceClass(10, 20)));

    for (ModelKind kind : {ModelKind::II, ModelKind::III})
        for (long d1 = 5; d1 <= 12; ++d1) {
            CoverSpec cover = branch_class(kind, d1);
            CHECK(cover.b == Rat(2) * cover.l);
            CHECK(cover.b.integral());
            CHECK(cover.l.integral());
            CHECK(cover.odd == (d1 % 2 == 1));
        }
}

TEST_CASE("branch restricted to the distinguished section") {
    // Odd degrees: the restriction has negative class, so the branch can
    // be moved off the section entirely.  Even degrees restrict to the
    // trivial class instead.
    for (ModelKind kind : {ModelKind::II, ModelKind::III}) {
        DegenerationModel m = model_data(kind);
        for (long d1 = 5; d1 <= 11; d1 += 2) {
            SurfaceClass r = restrict_to_section(m.bundle, branch_class(kind, d1).b);
            CHECK(lattice_h0(m.bundle.base, r) == Int(0));
        }
    }
    CHECK(restrict_to_section(model_data(ModelKind::II).bundle,
                              branch_class(ModelKind::II, 5).b) == SurfaceClass(-2, -2));
    CHECK(restrict_to_section(model_data(ModelKind::II).bundle,
                              branch_class(ModelKind::II, 6).b) == SurfaceClass(0, 0));
}

TEST_CASE("section counts") {
    CHECK(big_n(5) == Int(286));
    CHECK(big_n(6) == Int(455));
    CHECK(big_n(7) == Int(680));
    for (long d1 = 5; d1 <= 60; ++d1) CHECK(big_n(d1) == odd_square_sum(d1));

    // Both models see the same section space for O(B).
    for (ModelKind kind : {ModelKind::II, ModelKind::III})
        for (long d1 = 5; d1 <= 9; ++d1) {
            DegenerationModel m = model_data(kind);
            CohVec h = h_threefold(m.bundle, branch_class(kind, d1).b);
            CHECK(h[0] == big_n(d1));
            CHECK(h[1] == Int(0));
            CHECK(h[2] == Int(d1 % 2 == 1 ? 1 : 0));
            CHECK(h[3] == Int(0));
        }
}

TEST_CASE("Euler sequence middles and tangent rows") {
    CHECK(euler_tangent(model_data(ModelKind::II)) == vec({16, 0, 1, 0}));
    CHECK(euler_tangent(model_data(ModelKind::III)) == vec({17, 1, 1, 0}));
}

TEST_CASE("twisted tangent rows, type II") {
    TwistedTangent t5 = tangent_twisted(ModelKind::II, 5);
    CHECK(all_points(t5.h));
    CHECK(points(t5.h) == vec({0, 0, 0, 0}));

    TwistedTangent t6 = tangent_twisted(ModelKind::II, 6);
    CHECK(points(t6.h) == vec({0, 0, 2, 6}));
    CHECK(t6.rel == vec({0, 0, 0, 0}));

    TwistedTangent t7 = tangent_twisted(ModelKind::II, 7);
    CHECK(points(t7.h) == vec({0, 0, 0, 20}));
    CHECK(t7.rel == vec({0, 0, 0, 4}));
    CHECK(entry_is(t7.base[3], 16));

    TwistedTangent t8 = tangent_twisted(ModelKind::II, 8);
    CHECK(entry_is(t8.h[0], 0));
    CHECK(entry_is(t8.h[1], 0));
    CHECK(entry_is(t8.h[2], 0, 2));
    CHECK(entry_is(t8.h[3], 43, 45));

    TwistedTangent t9 = tangent_twisted(ModelKind::II, 9);
    CHECK(points(t9.h) == vec({0, 0, 0, 84}));
    CHECK(t9.rel == vec({0, 0, 0, 20}));

    TwistedTangent t10 = tangent_twisted(ModelKind::II, 10);
    CHECK(entry_is(t10.h[2], 0, 2));
    CHECK(entry_is(t10.h[3], 138, 140));

    // Odd-degree totals follow the (d1-2)(d1-3)(d1-5)/2 law.
    for (long d1 : {5L, 7L, 9L}) {
        TwistedTangent t = tangent_twisted(ModelKind::II, d1);
        CHECK(Rat(points(t.h)[3]) == twisted_form(d1, 2));
    }
    CHECK(twisted_form(7, 2) == Rat(20));
    CHECK(twisted_form(7, 6) == rat(20, 3));  // the quoted per-piece form
}

TEST_CASE("twisted tangent rows, type III") {
    TwistedTangent t5 = tangent_twisted(ModelKind::III, 5);
    CHECK(all_points(t5.h));
    CHECK(points(t5.h) == vec({0, 1, 2, 1}));

    TwistedTangent t6 = tangent_twisted(ModelKind::III, 6);
    CHECK(entry_is(t6.h[1], 0));
    CHECK(entry_is(t6.h[2], 2, 3));
    CHECK(entry_is(t6.h[3], 6, 7));

    // The relative piece contributes in degree 3 here, so the assembled
    // sequence admits a connecting rank and the totals widen accordingly.
    TwistedTangent t7 = tangent_twisted(ModelKind::III, 7);
    CHECK(t7.rel == vec({0, 0, 0, 4}));
    CHECK(entry_is(t7.base[2], 2, 3));
    CHECK(entry_is(t7.base[3], 17, 18));
    CHECK(entry_is(t7.h[1], 1));
    CHECK(entry_is(t7.h[2], 0, 3));
    CHECK(entry_is(t7.h[3], 18, 22));
}

TEST_CASE("normal sheaf rows") {
    NormalSheafRows r = normal_sheaf_rows(ModelKind::II, 5);
    CHECK(r.h_o == vec({1, 0, 0, 0}));
    CHECK(r.h_ob == vec({286, 0, 1, 0}));
    CHECK(r.h_nb == vec({285, 0, 1, 0}));

    NormalSheafRows r6 = normal_sheaf_rows(ModelKind::III, 6);
    CHECK(r6.h_ob == vec({455, 0, 0, 0}));
    CHECK(r6.h_nb == vec({454, 0, 0, 0}));
}

TEST_CASE("external facts") {
    auto ids = [](const std::vector<ExternalFact>& fs) {
        std::vector<std::string> out;
        for (const auto& f : fs) out.push_back(f.id);
        return out;
    };

    std::vector<ExternalFact> f25 = external_facts(ModelKind::II, 5);
    REQUIRE(f25.size() == 2);
    CHECK(f25[0].id == "tx-h0-vanishing");
    CHECK(f25[0].value == Int(0));
    CHECK(f25[1].id == "tx-h2-asserted");
    CHECK(f25[1].value == Int(0));

    CHECK(external_facts(ModelKind::II, 6)[1].value == Int(1));
    CHECK(external_facts(ModelKind::III, 5)[1].value == Int(2));
    CHECK(ids(external_facts(ModelKind::III, 6)) ==
          std::vector<std::string>{"tx-h0-vanishing"});
}

TEST_CASE("final tables, type II") {
    FinalTable t5 = final_table(ModelKind::II, 5);
    CHECK(points(t5.tx) == vec({0, 269, 0, 0}));
    REQUIRE(t5.facts.size() == 2);
    CHECK(t5.facts[0].applied);
    CHECK(t5.facts[0].consistent);
    CHECK(t5.facts[1].applied);
    CHECK(t5.facts[1].consistent);

    FinalTable t7 = final_table(ModelKind::II, 7);
    CHECK(points(t7.tx) == vec({0, 663, 0, 20}));
    CHECK(has_note(t7.audit, "4 (relative) and 16 (base)"));

    FinalTable t9 = final_table(ModelKind::II, 9);
    CHECK(points(t9.tx) == vec({0, 1313, 0, 84}));

    FinalTable t8 = final_table(ModelKind::II, 8);
    CHECK(entry_is(t8.tx[1], big_n(8).get_si() - 17));
    CHECK(entry_is(t8.tx[2], 1));

    CHECK_THROWS_AS(final_table(ModelKind::II, 4), std::domain_error);
}

TEST_CASE("the asserted h^2 is refused when exactness contradicts it") {
    FinalTable t6 = final_table(ModelKind::II, 6);
    CHECK(points(t6.tx) == vec({0, 438, 3, 6}));
    REQUIRE(t6.facts.size() == 2);
    CHECK(t6.facts[0].consistent);
    CHECK_FALSE(t6.facts[1].consistent);
    CHECK(has_note(t6.audit, "forces 3"));
    // The exactness row alone already pins degree 2.
    CHECK(entry_is(t6.tx_exact[2], 3));
}

TEST_CASE("final tables, type III") {
    FinalTable t5 = final_table(ModelKind::III, 5);
    CHECK(points(t5.tx) == vec({0, 270, 2, 1}));
    REQUIRE(t5.facts.size() == 2);
    CHECK(t5.facts[1].applied);
    CHECK(t5.facts[1].consistent);
    // Without the asserted fact the last two entries stay coupled windows.
    CHECK(entry_is(t5.tx_exact[2], 2, 3));
    CHECK(entry_is(t5.tx_exact[3], 1, 2));

    FinalTable t6 = final_table(ModelKind::III, 6);
    CHECK(entry_is(t6.tx[1], 438));

    FinalTable t7 = final_table(ModelKind::III, 7);
    CHECK(entry_is(t7.tx[1], 664));
}

TEST_CASE("h^2 assessment") {
    H2Assessment a5 = h2_tx(ModelKind::II, 5);
    CHECK_FALSE(a5.conflict);
    REQUIRE(a5.asserted.has_value());
    CHECK(*a5.asserted == Int(0));

    H2Assessment a6 = h2_tx(ModelKind::II, 6);
    CHECK(a6.conflict);
    CHECK(*a6.asserted == Int(1));
    CHECK(entry_is(a6.exactness, 3));

    H2Assessment a8 = h2_tx(ModelKind::II, 8);
    CHECK_FALSE(a8.conflict);
    CHECK(*a8.asserted == Int(1));

    H2Assessment b6 = h2_tx(ModelKind::III, 6);
    CHECK_FALSE(b6.asserted.has_value());
}

TEST_CASE("moduli dimensions") {
    CHECK(moduli_dimension(ModelKind::II, 5) == Int(269));
    CHECK(moduli_dimension(ModelKind::III, 5) == Int(270));
    CHECK(moduli_dimension(ModelKind::II, 6) == Int(438));
    CHECK(moduli_dimension(ModelKind::III, 6) == Int(438));
    CHECK(moduli_dimension(ModelKind::III, 7) == Int(664));
    CHECK(moduli_dimension(ModelKind::II, 7) == Int(663));
}

TEST_CASE("numerical invariants") {
    SurfaceInvariants i5 = invariants(5);
    CHECK(i5.vol == Int(2));
    CHECK(i5.pg == Int(4));
    SurfaceInvariants i6 = invariants(6);
    CHECK(i6.vol == Int(16));
    CHECK(i6.pg == Int(10));
    SurfaceInvariants i7 = invariants(7);
    CHECK(i7.vol == Int(54));
    CHECK(i7.pg == Int(20));
    CHECK_THROWS_AS(invariants(4), std::domain_error);

    // p_g counts degree d1-4 monomials in four variables.
    for (long d1 = 5; d1 <= 30; ++d1) {
        Int count(0);
        long d = d1 - 4;
        for (long i = 0; i <= d; ++i)
            for (long j = 0; i + j <= d; ++j)
                for (long k = 0; i + j + k <= d; ++k) count += 1;
        CHECK(invariants(d1).pg == count);
    }
}
