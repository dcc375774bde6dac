#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "binomideal/groebner.hpp"

namespace binomideal {

/// I_[P] for a projective point, generated by the 2x2 relations
/// α_k·t_i - α_i·t_k over all pairs. Emitted un-minimized; the Gröbner
/// reduction canonicalizes.
inline Ideal point_ideal_projective(const PolynomialRing& ring, const ProjectivePoint& P) {
    const Coords& a = P.coords();
    std::vector<Polynomial> gens;
    for (int k = 0; k < ring.nvars; ++k) {
        for (int i = k + 1; i < ring.nvars; ++i) {
            // α_k t_i − α_i t_k
            Polynomial g =
                Polynomial::term(ring, Monomial::variable(ring.nvars, i), a[static_cast<std::size_t>(k)]) -
                Polynomial::term(ring, Monomial::variable(ring.nvars, k), a[static_cast<std::size_t>(i)]);
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
    }
    return Ideal(ring, std::move(gens));
}

/// I_P = (t_1 - α_1, ..., t_s - α_s), the maximal ideal at an affine point.
inline Ideal point_ideal_affine(const PolynomialRing& ring, const AffinePoint& P) {
    const FieldContext& F = *ring.field;
    const Coords& a = P.coords();
    std::vector<Polynomial> gens;
    gens.reserve(static_cast<std::size_t>(ring.nvars));
    for (int i = 0; i < ring.nvars; ++i)
        gens.push_back(Polynomial::term(ring, Monomial::variable(ring.nvars, i), F.one()) -
                       Polynomial::constant(ring, a[static_cast<std::size_t>(i)]));
    return Ideal(ring, std::move(gens));
}

/// Evaluation matrix of a list of monomials at the points of Y:
/// entry(r, c) = value of monomial c at representative r.
struct EvaluationMatrix {
    std::vector<Monomial> columns;
    std::vector<std::vector<FieldElement>> entries;  // entries[r][c]

    static EvaluationMatrix build(const PolynomialRing& ring, const PointSet& Y,
                                  std::vector<Monomial> monomials) {
        EvaluationMatrix M;
        M.columns = std::move(monomials);
        M.entries.reserve(Y.size());
        for (const Coords& pt : Y.elements()) {
            std::vector<FieldElement> row;
            row.reserve(M.columns.size());
            for (const Monomial& m : M.columns)
                row.push_back(Polynomial::term(ring, m, ring.field->one()).evaluate(pt));
            M.entries.push_back(std::move(row));
        }
        return M;
    }
};

enum class VanishingMethod { bm, intersection };

namespace detail {

inline std::vector<Monomial> monomials_of_degree(int nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(nvars), 0);
    // enumerate all exponent vectors summing to d
    auto rec = [&](auto&& self, int i, std::uint32_t rem) -> void {
        if (i == nvars - 1) {
            exps[static_cast<std::size_t>(i)] = rem;
            out.emplace_back(exps);
            return;
        }
        for (std::uint32_t e = 0; e <= rem; ++e) {
            exps[static_cast<std::size_t>(i)] = e;
            self(self, i + 1, rem - e);
        }
    };
    if (nvars == 0) return out;
    rec(rec, 0, d);
    return out;
}

// One pivot of the incremental point-evaluation elimination: a residual
// vector (leading entry scaled to 1) plus the polynomial evaluating to it.
struct BmPivot {
    std::vector<FieldElement> residual;
    std::size_t lead;  // first nonzero position
    Polynomial combo;
};

// Reduce v against the pivots, tracking the same combination on poly.
// Returns true when v reduced to zero (poly is then a new generator).
inline bool bm_reduce(const FieldContext& F, std::vector<FieldElement>& v, Polynomial& poly,
                      const std::vector<BmPivot>& pivots) {
    for (const BmPivot& pv : pivots) {
        FieldElement c = v[pv.lead];
        if (c.value == 0) continue;
        for (std::size_t r = 0; r < v.size(); ++r)
            v[r] = F.sub(v[r], F.mul(c, pv.residual[r]));
        poly = poly - pv.combo.scale(c);
    }
    for (const FieldElement& c : v)
        if (c.value != 0) return false;
    return true;
}

inline void bm_add_pivot(const FieldContext& F, std::vector<FieldElement> v, Polynomial poly,
                         std::vector<BmPivot>& pivots) {
    std::size_t lead = 0;
    while (v[lead].value == 0) ++lead;
    FieldElement scale = F.inv(v[lead]);
    for (auto& c : v) c = F.mul(scale, c);
    pivots.push_back({std::move(v), lead, poly.scale(scale)});
}

inline bool divisible_by_any(const Monomial& m, const std::vector<Polynomial>& basis) {
    for (const Polynomial& g : basis)
        if (g.leading_monomial().divides(m)) return true;
    return false;
}

// Buchberger–Möller, projective flavour: homogeneous components are
// processed with a fresh matrix per degree; stops once the per-degree
// standard-monomial count sits at |Y| for two consecutive degrees.
inline std::vector<Polynomial> bm_projective(const PolynomialRing& ring, const PointSet& Y) {
    const FieldContext& F = *ring.field;
    std::vector<Polynomial> basis;
    std::size_t stable_degrees = 0;
    std::uint32_t max_degree = static_cast<std::uint32_t>(Y.size()) + 2;
    for (std::uint32_t d = 1; stable_degrees < 2; ++d) {
        if (d > max_degree)
            fail("InternalInconsistency", "projective point interpolation ran past degree " +
                                              std::to_string(max_degree));
        std::vector<Monomial> all = monomials_of_degree(ring.nvars, d);
        std::sort(all.begin(), all.end(),
                  [&](const Monomial& a, const Monomial& b) { return ring.order.less(a, b); });
        std::vector<BmPivot> pivots;
        for (const Monomial& m : all) {
            if (divisible_by_any(m, basis)) continue;
            std::vector<FieldElement> v;
            v.reserve(Y.size());
            Polynomial poly = Polynomial::term(ring, m, F.one());
            for (const Coords& pt : Y.elements()) v.push_back(poly.evaluate(pt));
            if (bm_reduce(F, v, poly, pivots))
                basis.push_back(std::move(poly));
            else
                bm_add_pivot(F, std::move(v), std::move(poly), pivots);
        }
        stable_degrees = pivots.size() == Y.size() ? stable_degrees + 1 : 0;
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring.order.less(a.leading_monomial(), b.leading_monomial());
    });
    return basis;
}

// Affine flavour: one global elimination across degrees 0,1,2,...; stops at
// the first degree where every monomial is already a leading-term multiple.
inline std::vector<Polynomial> bm_affine(const PolynomialRing& ring, const PointSet& Y) {
    const FieldContext& F = *ring.field;
    std::vector<Polynomial> basis;
    std::vector<BmPivot> pivots;
    std::uint32_t max_degree = static_cast<std::uint32_t>(Y.size()) + 2;
    for (std::uint32_t d = 0;; ++d) {
        if (d > max_degree)
            fail("InternalInconsistency",
                 "affine point interpolation ran past degree " + std::to_string(max_degree));
        std::vector<Monomial> all = monomials_of_degree(ring.nvars, d);
        std::sort(all.begin(), all.end(),
                  [&](const Monomial& a, const Monomial& b) { return ring.order.less(a, b); });
        bool any_candidate = false;
        for (const Monomial& m : all) {
            if (divisible_by_any(m, basis)) continue;
            any_candidate = true;
            std::vector<FieldElement> v;
            v.reserve(Y.size());
            Polynomial poly = Polynomial::term(ring, m, F.one());
            for (const Coords& pt : Y.elements()) v.push_back(poly.evaluate(pt));
            if (bm_reduce(F, v, poly, pivots))
                basis.push_back(std::move(poly));
            else
                bm_add_pivot(F, std::move(v), std::move(poly), pivots);
        }
        if (!any_candidate && d > 0) break;
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring.order.less(a.leading_monomial(), b.leading_monomial());
    });
    return basis;
}

}  // namespace detail

/// I(Y) for a finite nonempty point set, as a reduced Gröbner basis in the
/// ring's order. The bm method interpolates degree by degree from
/// evaluation-matrix kernels (and directly yields the reduced basis); the
/// intersection method folds the per-point prime ideals and serves as the
/// independent oracle.
inline Ideal vanishing_ideal(const PolynomialRing& ring, const PointSet& Y,
                             VanishingMethod method = VanishingMethod::bm) {
    if (Y.empty()) fail("EmptySet", "vanishing ideal of the empty set is not produced");
    if (ring.nvars != Y.dimension())
        fail("DimensionMismatch", "ring and point set disagree on the number of variables");
    if (method == VanishingMethod::bm) {
        // The interpolated generators generate I(Y) (they reach past the
        // regularity) but need not be a Gröbner basis of it: leading terms
        // of S-polynomial survivors can live above the generation degree.
        std::vector<Polynomial> gens = Y.projective() ? detail::bm_projective(ring, Y)
                                                      : detail::bm_affine(ring, Y);
        return Ideal::from_reduced_basis(ring, buchberger(ring, gens));
    }
    bool first = true;
    Ideal acc(ring, {});
    for (std::size_t i = 0; i < Y.size(); ++i) {
        Ideal pt = Y.projective() ? point_ideal_projective(ring, Y.projective_at(i))
                                  : point_ideal_affine(ring, Y.affine_at(i));
        if (first) {
            acc = std::move(pt);
            first = false;
        } else {
            acc = intersect(acc, pt);
        }
    }
    return Ideal::from_reduced_basis(ring, acc.reduced_basis());
}

/// Sanity contract: every reduced-basis element vanishes on Y and the zero
/// set of I recovers Y exactly (finite fields make closure the identity).
inline bool verify_vanishing(const Ideal& I, const PointSet& Y,
                             std::size_t bound = default_enumeration_bound) {
    if (Y.projective()) {
        if (!I.is_graded()) fail("NotGraded", "projective verification needs a graded ideal");
        for (const Polynomial& g : I.reduced_basis())
            for (std::size_t i = 0; i < Y.size(); ++i)
                if (!g.vanishes_at_projective(Y.projective_at(i))) return false;
        return zero_set_projective(I, bound) == Y;
    }
    for (const Polynomial& g : I.reduced_basis())
        for (const Coords& pt : Y.elements())
            if (g.evaluate(pt).value != 0) return false;
    return zero_set_affine(I, bound) == Y;
}

}  // namespace binomideal
