#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "binomideal/points.hpp"

namespace binomideal {

/// Monomial parameterization of a finite torus subgroup relative to the
/// cyclic subgroup H = <beta> of GF(p)*: the set of classes
/// [(x^{v_1},...,x^{v_s})] with x ranging over H^n.
struct Parameterization {
    std::uint32_t p = 2;
    int n = 0;                                  // number of parameters
    std::int64_t d = 1;                         // |H|; divides p-1
    FieldElement beta{1};                       // generator of H, order exactly d
    std::vector<std::vector<std::int64_t>> v;   // s rows of length n, entries in [0, d)
};

struct GroupGenerator {
    ProjectivePoint point;
    std::int64_t order = 1;
};

/// Order of a class in the group law of the projective torus.
inline std::int64_t projective_order(const FieldContext& F, const ProjectivePoint& P) {
    ProjectivePoint identity = ProjectivePoint::identity(F, P.dimension());
    ExtendedPoint cur(P);
    std::int64_t k = 1;
    while (!(cur.point() == identity)) {
        cur = proj_product(F, cur, ExtendedPoint(P));
        ++k;
        if (k > static_cast<std::int64_t>(F.p()) * P.dimension() + 1)
            fail("NotAGroup", "point has no finite order in the torus");
    }
    return k;
}

/// Greedy generating list for a finite torus subgroup: repeatedly adjoin a
/// maximal-order element outside the span (ties to the smallest point), so
/// every element of Y becomes a product of generator powers.
inline std::vector<GroupGenerator> abelian_generators(const PointSet& Y) {
    if (!Y.projective() || !is_torus_subgroup(Y).ok)
        fail("NotAGroup", "input is not a finite subgroup of a projective torus");
    const FieldContext& F = Y.field();
    int s = Y.dimension();

    std::vector<GroupGenerator> gens;
    PointSet span(F, s, Ambient::projective);
    span.insert(ProjectivePoint::identity(F, s));
    while (span.size() < Y.size()) {
        const Coords* pick = nullptr;
        std::int64_t best_order = 0;
        for (const Coords& c : Y.elements()) {
            if (span.contains(c)) continue;
            std::int64_t ord = projective_order(F, ProjectivePoint::from_canonical(c));
            if (ord > best_order) {
                best_order = ord;
                pick = &c;
            }
        }
        ProjectivePoint g = ProjectivePoint::from_canonical(*pick);
        gens.push_back({g, best_order});
        // extend the span by all products with powers of the new generator
        PointSet extended(F, s, Ambient::projective);
        for (const Coords& c : span.elements()) {
            ExtendedPoint cur(ProjectivePoint::from_canonical(c));
            for (std::int64_t e = 0; e < best_order; ++e) {
                extended.insert(cur.point());
                cur = proj_product(F, cur, ExtendedPoint(g));
            }
        }
        span = std::move(extended);
    }
    return gens;
}

/// Prop-style extraction (H, beta, v) from a finite torus subgroup. On
/// canonical representatives the first coordinate is 1, so the root-picking
/// step of the construction collapses to the trivial choice and H is just
/// the subgroup of GF(p)* generated by all generator coordinates.
inline Parameterization extract_parameterization(const PointSet& Y) {
    const FieldContext& F = Y.field();
    std::vector<GroupGenerator> gens = abelian_generators(Y);
    int s = Y.dimension();
    int n = static_cast<int>(gens.size());

    std::int64_t d = 1;
    for (const GroupGenerator& g : gens)
        for (const FieldElement& c : g.point.coords()) d = std::lcm(d, F.order(c));

    // beta: the order-d element of H with the smallest residue
    FieldElement beta = F.one();
    for (const FieldElement& h : F.subgroup_of_order(d)) {
        if (F.order(h) == d) {
            beta = h;
            break;
        }
    }

    Parameterization P;
    P.p = F.p();
    P.n = n;
    P.d = d;
    P.beta = beta;
    P.v.assign(static_cast<std::size_t>(s), std::vector<std::int64_t>());
    for (int j = 0; j < s; ++j) {
        P.v[static_cast<std::size_t>(j)].reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            P.v[static_cast<std::size_t>(j)].push_back(
                F.discrete_log(beta, gens[static_cast<std::size_t>(i)].point.coords()[static_cast<std::size_t>(j)]));
    }
    return P;
}

inline void validate_parameterization(const FieldContext& F, const Parameterization& P) {
    if (P.v.empty()) fail("InvalidParameterization", "exponent matrix needs at least one row");
    if (P.d < 1 || (static_cast<std::int64_t>(F.p()) - 1) % P.d != 0)
        fail("InvalidOrder", "d must divide p-1");
    if (P.beta.value == 0 || P.beta.value >= F.p() || F.order(P.beta) != P.d)
        fail("InvalidParameterization", "beta must generate a subgroup of order d");
    for (const auto& row : P.v) {
        if (static_cast<int>(row.size()) != P.n)
            fail("InvalidParameterization", "every exponent row needs n entries");
        for (std::int64_t e : row)
            if (e < 0 || e >= P.d) fail("InvalidParameterization", "exponents must lie in [0, d)");
    }
}

/// All classes [(x^{v_1},...,x^{v_s})] for x in H^n, deduplicated; the
/// parameter tuple runs in lexicographic order over exponents of beta.
inline PointSet enumerate_parameterized(const FieldContext& F, const Parameterization& P,
                                        std::size_t bound = default_enumeration_bound) {
    validate_parameterization(F, P);
    int s = static_cast<int>(P.v.size());
    std::uint64_t total = 1;
    for (int k = 0; k < P.n; ++k) {
        total *= static_cast<std::uint64_t>(P.d);
        if (total > bound)
            fail("EnumerationTooLarge",
                 "parameter space H^n exceeds " + std::to_string(bound) + " tuples");
    }
    PointSet out(F, s, Ambient::projective);
    std::vector<std::int64_t> e(static_cast<std::size_t>(P.n), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (int k = P.n - 1; k >= 0; --k) {
            e[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(rest % P.d);
            rest /= static_cast<std::uint64_t>(P.d);
        }
        Coords c(static_cast<std::size_t>(s));
        for (int j = 0; j < s; ++j) {
            std::int64_t exp = 0;
            for (int k = 0; k < P.n; ++k)
                exp = (exp + e[static_cast<std::size_t>(k)] * P.v[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]) % P.d;
            c[static_cast<std::size_t>(j)] = F.pow(P.beta, exp);
        }
        out.insert(ProjectivePoint::normalize(F, c));
    }
    return out;
}

}  // namespace binomideal
