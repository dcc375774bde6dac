#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace binomideal;
using namespace testsupport;

namespace {

/// Every subgroup of the projective torus of P^{s-1}(GF(p)), found by
/// closing all generator sets of size <= 2 (the torus group has rank <= 2
/// for s <= 3, so two generators always suffice).
std::vector<PointSet> all_torus_subgroups(const FieldContext& F, int s) {
    std::vector<ProjectivePoint> torus;
    for (const auto& P : all_projective_points(F, s))
        if (P.in_torus()) torus.push_back(P);
    std::vector<PointSet> out;
    auto add = [&](const PointSet& candidate) {
        for (const auto& existing : out)
            if (existing == candidate) return;
        out.push_back(candidate);
    };
    PointSet trivial(F, s, Ambient::projective);
    trivial.insert(ProjectivePoint::identity(F, s));
    add(trivial);
    for (std::size_t i = 0; i < torus.size(); ++i) {
        PointSet single(F, s, Ambient::projective);
        single.insert(torus[i]);
        add(monoid_closure(single).set);
        for (std::size_t j = i + 1; j < torus.size(); ++j) {
            PointSet pair(F, s, Ambient::projective);
            pair.insert(torus[i]);
            pair.insert(torus[j]);
            add(monoid_closure(pair).set);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("projective order") {
    FieldContext F5(5);
    CHECK(projective_order(F5, ProjectivePoint::identity(F5, 2)) == 1);
    CHECK(projective_order(F5, pp(F5, {1, 4})) == 2);
    CHECK(projective_order(F5, pp(F5, {1, 2})) == 4);
}

TEST_CASE("abelian generators") {
    FieldContext F5(5);
    PointSet trivial(F5, 2, Ambient::projective);
    trivial.insert(ProjectivePoint::identity(F5, 2));
    CHECK(abelian_generators(trivial).empty());

    auto gens = abelian_generators(proj_set(F5, 2, {{1, 1}, {1, 4}}));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].point == pp(F5, {1, 4}));
    CHECK(gens[0].order == 2);

    FieldContext F3(3);
    auto klein = abelian_generators(
        proj_set(F3, 3, {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}}));
    REQUIRE(klein.size() == 2);
    CHECK(klein[0].order == 2);
    CHECK(klein[1].order == 2);

    CHECK_THROWS_WITH_AS(abelian_generators(proj_set(F3, 2, {{1, 0}, {1, 1}})),
                         doctest::Contains("NotAGroup"), Error);
}

TEST_CASE("extract_parameterization examples") {
    FieldContext F5(5);
    PointSet trivial(F5, 2, Ambient::projective);
    trivial.insert(ProjectivePoint::identity(F5, 2));
    Parameterization none = extract_parameterization(trivial);
    CHECK(none.n == 0);
    CHECK(none.d == 1);
    CHECK(none.beta.value == 1);
    REQUIRE(none.v.size() == 2);
    CHECK(none.v[0].empty());
    CHECK(enumerate_parameterized(F5, none) == trivial);

    Parameterization pm = extract_parameterization(proj_set(F5, 2, {{1, 1}, {1, 4}}));
    CHECK(pm.n == 1);
    CHECK(pm.d == 2);
    CHECK(pm.beta.value == 4);
    CHECK(pm.v == std::vector<std::vector<std::int64_t>>{{0}, {1}});

    FieldContext F3(3);
    Parameterization klein = extract_parameterization(
        proj_set(F3, 3, {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}}));
    CHECK(klein.n == 2);
    CHECK(klein.d == 2);
    CHECK(klein.beta.value == 2);
    REQUIRE(klein.v.size() == 3);
    CHECK(klein.v[0] == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("enumerate_parameterized examples") {
    FieldContext F5(5);
    Parameterization pm;
    pm.p = 5;
    pm.n = 1;
    pm.d = 2;
    pm.beta = {4};
    pm.v = {{0}, {1}};
    CHECK(enumerate_parameterized(F5, pm) == proj_set(F5, 2, {{1, 1}, {1, 4}}));

    FieldContext F7(7);
    Parameterization cubic;
    cubic.p = 7;
    cubic.n = 1;
    cubic.d = 3;
    cubic.beta = {2};
    cubic.v = {{0}, {1}};
    CHECK(enumerate_parameterized(F7, cubic) == proj_set(F7, 2, {{1, 1}, {1, 2}, {1, 4}}));

    Parameterization bad = cubic;
    bad.d = 4;  // does not divide 6
    CHECK_THROWS_WITH_AS(enumerate_parameterized(F7, bad), doctest::Contains("InvalidOrder"),
                         Error);
    Parameterization wrong_beta = cubic;
    wrong_beta.beta = {3};  // order 6, not 3
    CHECK_THROWS_WITH_AS(enumerate_parameterized(F7, wrong_beta),
                         doctest::Contains("InvalidParameterization"), Error);
    Parameterization big = cubic;
    CHECK_THROWS_WITH_AS(enumerate_parameterized(F7, big, 2),
                         doctest::Contains("EnumerationTooLarge"), Error);
}

TEST_CASE("round trip over every torus subgroup (p in {3,5,7}, s in {2,3})") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        FieldContext F(p);
        for (int s : {2, 3}) {
            for (const PointSet& Y : all_torus_subgroups(F, s)) {
                Parameterization P = extract_parameterization(Y);
                PointSet back = enumerate_parameterized(F, P);
                CHECK(back == Y);
                CHECK(is_torus_subgroup(back).ok);
                CHECK(P.beta.value != 0);
                CHECK(F.order(P.beta) == P.d);
                // |Y| divides d^n
                std::uint64_t dn = 1;
                for (int k = 0; k < P.n; ++k) dn *= static_cast<std::uint64_t>(P.d);
                CHECK(dn % Y.size() == 0);
                for (const auto& row : P.v)
                    for (std::int64_t e : row) {
                        CHECK(e >= 0);
                        CHECK(e < P.d);
                    }
            }
        }
    }
}
