#include <set>

#include "doctest.h"
#include "toric/catalog.hpp"
#include "toric/constructions.hpp"
#include "toric/frobenius.hpp"
#include "toric/geometry.hpp"

using namespace toric;

namespace {

StackyFan projective_line() {
    StackyFan fan;
    fan.n = 1;
    fan.B = IntMatrix::from_rows({{1, -1}});
    fan.max_cones = {{1}, {2}};
    return fan;
}

StackyFan p1_gerbe() {
    StackyFan fan;
    fan.n = 1;
    fan.torsion = {Int(2)};
    fan.B = IntMatrix::from_rows({{1, -1}, {0, 1}});
    fan.max_cones = {{1}, {2}};
    return fan;
}

}  // namespace

TEST_CASE("identity and Frobenius morphism data") {
    for (const char* name : {"p2", "root-p2-c2", "hirzebruch-ex2", "example3"}) {
        StackyFan fan = example_fan(name);
        CHECK(identity_morphism(fan).is_valid());
        CHECK(frobenius_morphism(fan, 2).is_valid());
        CHECK(frobenius_morphism(fan, 6).is_valid());
    }
    StackyFan gerbe = p1_gerbe();
    CHECK(frobenius_morphism(gerbe, 3).is_valid());
    CHECK_THROWS_AS(frobenius_morphism(gerbe, 0), std::invalid_argument);

    // tampering with C breaks the homotopy identity
    ToricMorphism phi = identity_morphism(projective_plane());
    phi.C.at(0, 0) = 2;
    CHECK_FALSE(phi.is_valid());
}

TEST_CASE("pullback along identity and Frobenius") {
    StackyFan gerbe = p1_gerbe();
    PicardGroup pic(gerbe);
    LineBundle L = pic.bundle(std::vector<long>{3, -1}, std::vector<long>{1});

    CHECK(pullback(identity_morphism(gerbe), pic, L) == L);
    LineBundle F2 = pullback(frobenius_morphism(gerbe, 2), pic, L);
    CHECK(F2 == pic.bundle(std::vector<long>{6, -2}, std::vector<long>{2}));

    PicardGroup p1(projective_line());
    LineBundle pulled = pullback(frobenius_morphism(projective_line(), 2), p1, p1.bundle({1, 0}));
    CHECK(pulled == p1.bundle({2, 0}));

    CHECK_THROWS_AS(pullback(identity_morphism(projective_plane()), pic, L), std::invalid_argument);
}

TEST_CASE("root stack along divisors") {
    StackyFan p2 = projective_plane();

    SUBCASE("trivial orders keep the fan") {
        FanWithMorphism triv = root_stack_divisors(p2, {1, 1, 1});
        CHECK(triv.fan == p2);
        CHECK(triv.phi.is_valid());
        CHECK(triv.phi.C == IntMatrix::identity(3));
    }
    SUBCASE("uniform order c reproduces the catalog fans and their summands") {
        FanWithMorphism r2 = root_stack_divisors(p2, {2, 2, 2});
        CHECK(r2.fan.B == IntMatrix::from_rows({{2, 0, -2}, {0, 2, -2}}));
        CHECK(r2.phi.is_valid());
        CHECK(r2.fan == example_fan("root-p2-c2"));
        CHECK(stable_summands(PicardGroup(r2.fan)).size() == 12);

        FanWithMorphism r3 = root_stack_divisors(p2, {3, 3, 3});
        CHECK(r3.fan == example_fan("root-p2-c3"));
        CHECK(stable_summands(PicardGroup(r3.fan)).size() == 27);
    }
    SUBCASE("1-dimensional case and guards") {
        FanWithMorphism r = root_stack_divisors(projective_line(), {3, 1});
        CHECK(r.fan.B == IntMatrix::from_rows({{3, -1}}));
        CHECK(r.phi.is_valid());
        CHECK_THROWS_AS(root_stack_divisors(p2, {2, 2}), std::invalid_argument);
        CHECK_THROWS_AS(root_stack_divisors(p2, {2, 0, 2}), std::invalid_argument);
    }
}

TEST_CASE("root stack along line bundles") {
    SUBCASE("order 1 keeps the Picard group") {
        StackyFan p2 = projective_plane();
        PicardGroup pic(p2);
        RootStackResult r = root_stack_line_bundles(p2, {pic.bundle({1, 0, 0})}, {1});
        CHECK(r.phi.is_valid());
        PicardGroup rpic(r.fan);
        CHECK(rpic.group().free_rank() == pic.group().free_rank());
        CHECK(rpic.group().invariant_factors() == pic.group().invariant_factors());
    }
    SUBCASE("square root of O(D1) on P^1: the gerbe generator halves the pullback") {
        StackyFan p1 = projective_line();
        PicardGroup pic(p1);
        RootStackResult r = root_stack_line_bundles(p1, {pic.bundle({1, 0})}, {2});
        REQUIRE(r.phi.is_valid());
        PicardGroup rpic(r.fan);

        LineBundle g = r.gerbe_generator(rpic, 0);
        LineBundle pulled = pullback(r.phi, rpic, pic.bundle({1, 0}));
        CHECK(rpic.scale(2, g) == pulled);
        // Pic gains an index-2 extension: still free of rank 1, no torsion added
        CHECK(rpic.group().free_rank() == 1);
    }
    SUBCASE("pullback identity for arbitrary bundles on a torsion base") {
        StackyFan gerbe = p1_gerbe();
        PicardGroup pic(gerbe);
        LineBundle root_of = pic.bundle(std::vector<long>{0, 1}, std::vector<long>{1});
        RootStackResult r = root_stack_line_bundles(gerbe, {root_of}, {3});
        REQUIRE(r.phi.is_valid());
        PicardGroup rpic(r.fan);

        for (long k1 : {-2L, 0L, 3L})
            for (long l1 : {0L, 1L}) {
                LineBundle base = pic.bundle(std::vector<long>{k1, 1}, std::vector<long>{l1});
                // old coordinates (k, (l, 0)) transported into the new presentation
                IntVec l_old = base.l;
                l_old.push_back(0);
                LineBundle expect =
                    rpic.bundle(vec_add(base.k, r.l_to_k.mul(l_old)), r.l_to_l.mul(l_old));
                CHECK(pullback(r.phi, rpic, base) == expect);
            }
        LineBundle g = r.gerbe_generator(rpic, 0);
        CHECK(rpic.scale(3, g) == pullback(r.phi, rpic, root_of));
    }
    SUBCASE("guards") {
        StackyFan p1 = projective_line();
        PicardGroup pic(p1);
        CHECK_THROWS_AS(root_stack_line_bundles(p1, {}, {}), std::invalid_argument);
        CHECK_THROWS_AS(root_stack_line_bundles(p1, {pic.trivial()}, {0}), std::invalid_argument);
        CHECK_THROWS_AS(root_stack_line_bundles(p1, {pic.trivial()}, {2, 2}), std::invalid_argument);
    }
}

TEST_CASE("rigidification") {
    SUBCASE("orbifolds are already rigid") {
        StackyFan fan = example_fan("root-p2-c2");
        RigidificationResult r = rigidification(fan);
        CHECK(r.fan == fan);
        CHECK(r.phi.is_valid());
    }
    SUBCASE("a P^1 gerbe rigidifies to P^1") {
        StackyFan gerbe = p1_gerbe();
        RigidificationResult r = rigidification(gerbe);
        CHECK(r.fan == projective_line());
        CHECK(r.phi.is_valid());
    }
    SUBCASE("roundtrip: the a-th root of the rigidification restores Pic") {
        StackyFan gerbe = p1_gerbe();
        RigidificationResult rig = rigidification(gerbe);
        PicardGroup rig_pic(rig.fan);

        // L_i = O(-sum_j b_{n+i,j} D_j) built from the dropped torsion row
        IntVec row = gerbe.B.row(1);
        RootStackResult back = root_stack_line_bundles(rig.fan, {rig_pic.bundle(vec_neg(row), {})},
                                                       {gerbe.torsion[0]});
        REQUIRE(back.phi.is_valid());
        PicardGroup orig(gerbe), rebuilt(back.fan);
        CHECK(orig.group().free_rank() == rebuilt.group().free_rank());
        CHECK(orig.group().invariant_factors() == rebuilt.group().invariant_factors());
    }
}

TEST_CASE("closed substacks") {
    SUBCASE("a ray of P^2 carries P^1") {
        SubstackResult sub = substack(projective_plane(), {1});
        CHECK(sub.fan.n == 1);
        CHECK(sub.fan.torsion.empty());
        CHECK(sub.divisor_rays == std::vector<std::size_t>{2, 3});
        PicardGroup pic(sub.fan);
        CHECK(pic.group().free_rank() == 1);
        CHECK(pic.group().invariant_factors().empty());
    }
    SUBCASE("a 2-cone of P^2 carries a point") {
        SubstackResult sub = substack(projective_plane(), {1, 2});
        CHECK(sub.fan.n == 0);
        CHECK(sub.fan.s() == 0);
        CHECK(sub.fan.torsion.empty());
    }
    SUBCASE("a ray of the double root of P^2 carries a rooted P(2,2)") {
        SubstackResult sub = substack(example_fan("root-p2-c2"), {3});
        PicardGroup pic(sub.fan);
        CHECK(pic.group().free_rank() == 1);
        CHECK(pic.group().invariant_factors() == IntVec{2, 2});
        CHECK(generic_stabilizer_order(sub.fan) == 2);
    }
    SUBCASE("restriction of classes is additive") {
        StackyFan fan = example_fan("root-p2-c2");
        SubstackResult sub = substack(fan, {3});
        PicardGroup pic(sub.fan);
        IntVec k1{1, 0, -1}, k2{0, 2, 1};
        LineBundle a = restrict_bundle(sub, pic, k1, {});
        LineBundle b = restrict_bundle(sub, pic, k2, {});
        CHECK(pic.add(a, b) == restrict_bundle(sub, pic, vec_add(k1, k2), {}));
        // a principal divisor restricts to the trivial class: rows of B
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(restrict_bundle(sub, pic, fan.B.row(i), {}) == pic.trivial());
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(substack(projective_plane(), {}), std::invalid_argument);
        CHECK_THROWS_AS(substack(projective_plane(), {4}), std::invalid_argument);
        CHECK_THROWS_AS(substack(projective_plane(), {1, 1}), std::invalid_argument);
    }
}

TEST_CASE("weighted blow-ups") {
    SUBCASE("smooth blow-up of P^2") {
        BlowupResult r = weighted_blowup(projective_plane(), {1, 2}, {1, 1});
        CHECK(r.m == 1);
        CHECK(r.h == IntVec{1, 1});
        CHECK(r.b_new == 1);
        CHECK(r.c == IntVec{1, 1});
        CHECK(r.fan.is_valid());
        CHECK(r.phi.is_valid());
        CHECK(r.fan.s() == 4);
    }
    SUBCASE("multiplicities (1,2) give h = 2 and weights (2,1)") {
        StackyFan fan;
        fan.n = 2;
        fan.B = IntMatrix::from_rows({{1, 0, -1}, {0, 2, -1}});
        fan.max_cones = {{1, 2}, {2, 3}, {3, 1}};
        BlowupResult r = weighted_blowup(fan, {1, 2}, {1, 1});
        CHECK(r.m == 1);
        CHECK(r.h == IntVec{1, 1});
        CHECK(r.h_scale == 2);
        CHECK(r.b_new == 2);
        CHECK(r.c == IntVec{2, 1});
        CHECK(r.phi.is_valid());
        // defining identity b_new v_new = sum c_i b_i v_i
        IntVec lhs = vec_scaled(r.v_new, r.b_new);
        IntVec rhs = vec_add(vec_scaled(fan.ray_data(1).v, r.c[0] * fan.ray_data(1).b),
                             vec_scaled(fan.ray_data(2).v, r.c[1] * fan.ray_data(2).b));
        CHECK(lhs == rhs);
    }
    SUBCASE("double root of P^2: b_new = c and the pullback identities") {
        StackyFan fan = example_fan("root-p2-c2");
        BlowupResult r = weighted_blowup(fan, {1, 2}, {1, 1});
        CHECK(r.b_new == 2);  // = c
        CHECK(r.c == IntVec{1, 1});
        REQUIRE(r.phi.is_valid());
        PicardGroup pic(r.fan), base(fan);
        for (std::size_t i = 1; i <= 3; ++i) {
            IntVec k(3);
            k[i - 1] = 1;
            IntVec expect(4);
            expect[i - 1] = 1;
            if (i <= 2) expect[3] = 1;  // D'_i + D'_4 for i = 1,2
            CHECK(pullback(r.phi, pic, base.bundle(k, {})) == pic.bundle(expect, {}));
        }
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(weighted_blowup(projective_plane(), {1, 2}, {2, 2}), std::invalid_argument);
        CHECK_THROWS_AS(weighted_blowup(projective_plane(), {1, 2}, {1, -1}), std::invalid_argument);
        CHECK_THROWS_AS(weighted_blowup(projective_plane(), {1, 3}, {1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(weighted_blowup(p1_gerbe(), {1, 2}, {1, 1}), std::domain_error);
    }
}

TEST_CASE("2D resolution") {
    SUBCASE("smooth fans need no steps") {
        ResolutionResult r = resolve_2d(projective_plane());
        CHECK(r.steps.empty());
        CHECK(r.fan == projective_plane());
    }
    SUBCASE("P(1,1,2) resolves in one step inserting (0,-1)") {
        ResolutionResult r = resolve_2d(example_fan("p112"));
        REQUIRE(r.steps.size() == 1);
        CHECK(r.steps[0].v_new == IntVec{0, -1});
        CHECK(r.fan.is_valid());
        for (const auto& cone : r.fan.max_cones) {
            Int d = cross2(r.fan.ray_data(cone[0]).v, r.fan.ray_data(cone[1]).v);
            CHECK(abs(d) == 1);
        }
    }
    SUBCASE("an A_1 cone gets its Hilbert basis ray") {
        StackyFan fan;
        fan.n = 2;
        fan.B = IntMatrix::from_rows({{1, 1, -1, 0}, {0, 2, 0, -1}});
        fan.max_cones = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
        ResolutionResult r = resolve_2d(fan);
        REQUIRE(!r.steps.empty());
        CHECK(r.steps[0].v_new == IntVec{1, 1});
        for (const auto& cone : r.fan.max_cones) {
            Int d = cross2(r.fan.ray_data(cone[0]).v, r.fan.ray_data(cone[1]).v);
            CHECK(abs(d) == 1);
        }
        // input rays survive into the resolution
        for (std::size_t i = 1; i <= fan.s(); ++i) {
            bool present = false;
            for (std::size_t j = 1; j <= r.fan.s(); ++j)
                present = present || r.fan.ray_data(j).v == fan.ray_data(i).v;
            CHECK(present);
        }
    }
    SUBCASE("random orbifolds resolve to unimodular fans with valid steps") {
        for (long b3 : {1L, 2L, 3L}) {
            StackyFan fan;
            fan.n = 2;
            fan.B = IntMatrix::from_rows({{1, 1, -2, 1}, {0, 3, 1, -2}});
            fan.B = fan.B * IntMatrix::diagonal({1, b3, 1, 1});
            fan.max_cones = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
            ResolutionResult r = resolve_2d(fan);
            CHECK(r.fan.is_valid());
            for (const auto& step : r.steps) CHECK(step.phi.is_valid());
            for (const auto& cone : r.fan.max_cones) {
                Int d = cross2(r.fan.ray_data(cone[0]).v, r.fan.ray_data(cone[1]).v);
                CHECK(abs(d) == 1);
            }
        }
    }
}
