#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "binomideal/vanishing.hpp"

namespace binomideal {

/// Identifies the character a monomial induces on a point set: two
/// equal-degree monomials share a key exactly when their difference
/// vanishes on every (canonical) representative.
struct CharacterKey {
    std::uint32_t degree = 0;
    std::vector<FieldElement> values;

    friend auto operator<=>(const CharacterKey&, const CharacterKey&) = default;
};

struct BinomialBasisWitness {};
struct MissingIdentityWitness {};
struct MonoidViolationWitness {
    Coords a, b;  // pair whose product escapes V(I(Y)) ∪ {[0]}
};
struct ZeroDivisorWitness {
    int variable = 0;  // 1-based; the witness lies in (I : t_i) \ I
    std::optional<Polynomial> poly;
};

using Witness = std::variant<std::monostate, BinomialBasisWitness, MissingIdentityWitness,
                             MonoidViolationWitness, ZeroDivisorWitness>;

/// Which independent routes were evaluated and what they said.
struct CrossChecks {
    bool monoid_criterion = false;        // V(I(Y)) ∪ {[0]} is a monoid
    bool pure_binomial_gb = false;        // reduced basis is all pure binomials
    bool zero_set_equals_input = false;   // V(I(Y)) = Y
    std::optional<bool> colon_stable;     // (I : t_i) = I for every i
    std::optional<bool> torus_subgroup;   // Y is a finite torus subgroup
};

struct Certificate {
    bool is_binomial = false;
    bool is_lattice = false;
    int dimension = 0;
    std::vector<Polynomial> basis;  // reduced Gröbner basis of I(Y)
    Witness witness;
    CrossChecks cross_checks;
};

namespace detail {

inline bool all_pure_binomials(const std::vector<Polynomial>& basis) {
    for (const Polynomial& g : basis)
        if (g.binomial_shape() != BinomialShape::pure_binomial) return false;
    return true;
}

inline Witness monoid_witness(const MonoidVerdict& v) {
    switch (v.failure) {
        case MonoidVerdict::Failure::missing_identity:
            return MissingIdentityWitness{};
        case MonoidVerdict::Failure::not_closed:
            return MonoidViolationWitness{v.witness_a, v.witness_b};
        default:
            return std::monostate{};
    }
}

}  // namespace detail

/// Binomiality of I(Y) for finite projective Y. The verdict is the monoid
/// criterion on the recomputed zero set V(I(Y)) ∪ {[0]}; the shape of the
/// reduced Gröbner basis is kept as a redundant cross-check and the two
/// must agree (both directions are theorems), so disagreement is an
/// internal error rather than a reportable outcome.
inline Certificate classify_binomial(const PolynomialRing& ring, const PointSet& Y,
                                     VanishingMethod method = VanishingMethod::bm,
                                     std::size_t bound = default_enumeration_bound) {
    if (!Y.projective()) fail("DimensionMismatch", "classify_binomial expects a projective set");
    Ideal I = vanishing_ideal(ring, Y, method);
    PointSet V = zero_set_projective(I, bound);
    MonoidVerdict verdict = is_extended_submonoid(V);

    Certificate cert;
    cert.basis = I.reduced_basis();
    cert.dimension = krull_dimension(I);
    cert.is_binomial = verdict.ok;
    cert.cross_checks.monoid_criterion = verdict.ok;
    cert.cross_checks.pure_binomial_gb = detail::all_pure_binomials(cert.basis);
    cert.cross_checks.zero_set_equals_input = (V == Y);
    if (cert.cross_checks.monoid_criterion != cert.cross_checks.pure_binomial_gb)
        fail("InternalInconsistency",
             "monoid criterion and Gröbner-basis shape disagree on binomiality");
    cert.witness = verdict.ok ? Witness{BinomialBasisWitness{}} : detail::monoid_witness(verdict);
    return cert;
}

/// Lattice property: binomial and every variable a non-zerodivisor mod
/// I(Y), i.e. (I : t_i) = I for all i. Cross-checked against the
/// torus-subgroup criterion on Y, which must agree.
inline Certificate classify_lattice(const PolynomialRing& ring, const PointSet& Y,
                                    VanishingMethod method = VanishingMethod::bm,
                                    std::size_t bound = default_enumeration_bound) {
    if (Y.empty()) fail("EmptySet", "lattice classification needs a nonempty set");
    Certificate cert = classify_binomial(ring, Y, method, bound);
    Ideal I = Ideal::from_reduced_basis(ring, cert.basis);

    bool colon_stable = true;
    std::optional<ZeroDivisorWitness> zd;
    for (int i = 1; i <= ring.nvars && colon_stable; ++i) {
        Ideal quotient = colon_by_variable(I, i);
        if (!same_ideal(quotient, I)) {
            colon_stable = false;
            ZeroDivisorWitness w;
            w.variable = i;
            for (const Polynomial& g : quotient.reduced_basis())
                if (!I.contains(g)) {
                    w.poly = g;
                    break;
                }
            zd = std::move(w);
        }
    }
    cert.cross_checks.colon_stable = colon_stable;
    cert.is_lattice = cert.is_binomial && colon_stable;

    bool torus = is_torus_subgroup(Y).ok;
    cert.cross_checks.torus_subgroup = torus;
    if (torus != cert.is_lattice)
        fail("InternalInconsistency",
             "colon-ideal lattice test and torus-subgroup test disagree");

    if (!cert.is_binomial) {
        // keep the monoid witness from classify_binomial
    } else if (!cert.is_lattice) {
        cert.witness = *zd;
    } else {
        cert.witness = BinomialBasisWitness{};
    }
    return cert;
}

/// Partition of the terms of a homogeneous f by the character each
/// monomial induces on Y, in order of first appearance.
inline std::vector<std::pair<CharacterKey, std::vector<Term>>> character_groups(
    const Polynomial& f, const PointSet& Y) {
    std::vector<std::pair<CharacterKey, std::vector<Term>>> groups;
    std::map<CharacterKey, std::size_t> index;
    for (const Term& t : f.terms()) {
        CharacterKey key;
        key.degree = t.mono.degree();
        key.values.reserve(Y.size());
        Polynomial mono = Polynomial::term(f.ring(), t.mono, f.ring().field->one());
        for (const Coords& pt : Y.elements()) key.values.push_back(mono.evaluate(pt));
        auto [it, fresh] = index.try_emplace(key, groups.size());
        if (fresh) groups.push_back({key, {}});
        groups[it->second].second.push_back(t);
    }
    return groups;
}

/// Rewrites f ∈ I(Y) as a weighted sum of pure binomials vanishing on Y:
/// within each character group the order-smallest monomial anchors, and
/// (λ_j, t^{a_j} − t^{anchor}) is emitted for every other member. The
/// weighted sum reconstructs f exactly.
inline std::vector<std::pair<FieldElement, Polynomial>> decompose_to_binomials(
    const Polynomial& f, const PointSet& Y, VanishingMethod method = VanishingMethod::bm) {
    const PolynomialRing& ring = f.ring();
    if (!f.is_homogeneous()) fail("NotHomogeneous", "decomposition needs a homogeneous input");
    if (!is_extended_submonoid(Y).ok)
        fail("NotAMonoid", "Y ∪ {[0]} must be a submonoid of P^{s-1} ∪ {[0]}");
    if (f.is_zero()) return {};
    Ideal I = vanishing_ideal(ring, Y, method);
    if (!I.contains(f)) fail("NotInIdeal", "polynomial does not vanish on Y");

    auto groups = character_groups(f, Y);
    // anchor of each group: the order-smallest member, i.e. the last one
    // seen while iterating f's terms in descending order
    std::vector<Monomial> anchors;
    anchors.reserve(groups.size());
    for (const auto& [key, terms] : groups) anchors.push_back(terms.back().mono);

    std::vector<std::pair<FieldElement, Polynomial>> parts;
    Polynomial reconstructed = Polynomial::zero(ring);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& terms = groups[g].second;
        for (std::size_t j = 0; j + 1 < terms.size(); ++j) {
            Polynomial binom = Polynomial::term(ring, terms[j].mono, ring.field->one()) -
                               Polynomial::term(ring, anchors[g], ring.field->one());
            reconstructed = reconstructed + binom.scale(terms[j].coeff);
            parts.emplace_back(terms[j].coeff, std::move(binom));
        }
    }
    if (!(reconstructed == f))
        fail("InternalInconsistency", "binomial decomposition failed to reconstruct the input");
    return parts;
}

/// The generator transform carrying I(Y) to I(τY) for affine submonoids:
/// t^b − t^c becomes τ^{-|b|}·t^b − τ^{-|c|}·t^c, returned monic.
inline std::vector<Polynomial> affine_scale_generators(const std::vector<Polynomial>& gens,
                                                       FieldElement tau) {
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (const Polynomial& g : gens) {
        const FieldContext& F = *g.ring().field;
        if (tau.value == 0) fail("ZeroScalar", "τ must be a unit");
        if (g.binomial_shape() != BinomialShape::pure_binomial)
            fail("NotPureBinomial", "generator is not of the form t^b - t^c");
        const Term& lead = g.terms()[0];
        const Term& tail = g.terms()[1];
        FieldElement cb = F.mul(lead.coeff, F.inv(F.pow(tau, lead.mono.degree())));
        FieldElement cc = F.mul(tail.coeff, F.inv(F.pow(tau, tail.mono.degree())));
        Polynomial scaled = Polynomial::term(g.ring(), lead.mono, cb) +
                            Polynomial::term(g.ring(), tail.mono, cc);
        out.push_back(scaled.monic());
    }
    return out;
}

/// Affine counterpart of classify_binomial: the affine monoid criterion on
/// the recomputed zero set decides; the lattice flag follows the same
/// colon-ideal definition (no torus cross-check applies in A^s).
inline Certificate classify_affine_binomial(const PolynomialRing& ring, const PointSet& Y,
                                            VanishingMethod method = VanishingMethod::bm,
                                            std::size_t bound = default_enumeration_bound) {
    if (Y.projective()) fail("DimensionMismatch", "classify_affine_binomial expects an affine set");
    Ideal I = vanishing_ideal(ring, Y, method);
    PointSet V = zero_set_affine(I, bound);
    MonoidVerdict verdict = is_affine_submonoid(V);

    Certificate cert;
    cert.basis = I.reduced_basis();
    cert.dimension = krull_dimension(I);
    cert.is_binomial = verdict.ok;
    cert.cross_checks.monoid_criterion = verdict.ok;
    cert.cross_checks.pure_binomial_gb = detail::all_pure_binomials(cert.basis);
    cert.cross_checks.zero_set_equals_input = (V == Y);
    if (cert.cross_checks.monoid_criterion != cert.cross_checks.pure_binomial_gb)
        fail("InternalInconsistency",
             "monoid criterion and Gröbner-basis shape disagree on binomiality");

    bool colon_stable = true;
    std::optional<ZeroDivisorWitness> zd;
    for (int i = 1; i <= ring.nvars && colon_stable; ++i) {
        Ideal quotient = colon_by_variable(I, i);
        if (!same_ideal(quotient, I)) {
            colon_stable = false;
            ZeroDivisorWitness w;
            w.variable = i;
            for (const Polynomial& g : quotient.reduced_basis())
                if (!I.contains(g)) {
                    w.poly = g;
                    break;
                }
            zd = std::move(w);
        }
    }
    cert.cross_checks.colon_stable = colon_stable;
    cert.is_lattice = cert.is_binomial && colon_stable;

    if (!cert.is_binomial)
        cert.witness = detail::monoid_witness(verdict);
    else if (!cert.is_lattice)
        cert.witness = *zd;
    else
        cert.witness = BinomialBasisWitness{};
    return cert;
}

}  // namespace binomideal
