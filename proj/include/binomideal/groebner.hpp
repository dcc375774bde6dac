#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "binomideal/polyring.hpp"

namespace binomideal {

/// Remainder of f on division by G: no remainder term is divisible by any
/// leading term of G, and f - result lies in <G>. Divisors are tried in
/// list order, so the result is deterministic for a fixed G.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
    const PolynomialRing& ring = f.ring();
    const FieldContext& F = *ring.field;
    Polynomial h = f;
    Polynomial remainder = Polynomial::zero(ring);
    while (!h.is_zero()) {
        bool reduced = false;
        for (const Polynomial& g : G) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(h.leading_monomial())) {
                Monomial q = g.leading_monomial().divide_into(h.leading_monomial());
                FieldElement c = F.mul(h.leading_coeff(), F.inv(g.leading_coeff()));
                h = h - g.times_term(q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Polynomial lt = Polynomial::term(ring, h.leading_monomial(), h.leading_coeff());
            remainder = remainder + lt;
            h = h - lt;
        }
    }
    return remainder;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const FieldContext& F = *f.ring().field;
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.times_term(f.leading_monomial().divide_into(l), F.inv(f.leading_coeff()));
    Polynomial b = g.times_term(g.leading_monomial().divide_into(l), F.inv(g.leading_coeff()));
    return a - b;
}

namespace detail {

// Interreduce a minimal basis: reduce every tail against the others until
// nothing changes. Input leading terms must be pairwise non-divisible.
inline void interreduce(std::vector<Polynomial>& G) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(G.size() - 1);
            for (std::size_t j = 0; j < G.size(); ++j)
                if (j != i) others.push_back(G[j]);
            Polynomial r = normal_form(G[i], others).monic();
            if (!(r == G[i])) {
                G[i] = r;
                changed = true;
            }
        }
    }
}

}  // namespace detail

/// Buchberger's algorithm with the normal selection strategy (pair with the
/// order-smallest lcm first, ties by creation index) and both classical
/// pair-elimination criteria. Returns the reduced Gröbner basis, monic and
/// sorted by ascending leading monomial.
inline std::vector<Polynomial> buchberger(const PolynomialRing& ring,
                                          const std::vector<Polynomial>& gens) {
    const TermOrder& ord = ring.order;
    std::vector<Polynomial> G;
    for (const Polynomial& f : gens)
        if (!f.is_zero()) G.push_back(f.monic());

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    auto push_pairs = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) pending.insert({i, n});
    };
    for (std::size_t n = 1; n < G.size(); ++n) push_pairs(n);

    auto lcm_of = [&](const Pair& pr) {
        return lcm(G[pr.first].leading_monomial(), G[pr.second].leading_monomial());
    };

    while (!pending.empty()) {
        // normal strategy: smallest lcm in the term order, then smallest index
        auto best = pending.begin();
        Monomial best_lcm = lcm_of(*best);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = lcm_of(*it);
            if (ord.less(l, best_lcm)) {
                best = it;
                best_lcm = l;
            }
        }
        Pair pr = *best;
        pending.erase(best);

        const Monomial& lm_i = G[pr.first].leading_monomial();
        const Monomial& lm_j = G[pr.second].leading_monomial();
        if (coprime(lm_i, lm_j)) continue;  // first criterion
        bool chained = false;               // second (chain) criterion
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == pr.first || k == pr.second) continue;
            if (!G[k].leading_monomial().divides(best_lcm)) continue;
            Pair ik{std::min(k, pr.first), std::max(k, pr.first)};
            Pair jk{std::min(k, pr.second), std::max(k, pr.second)};
            if (!pending.contains(ik) && !pending.contains(jk)) chained = true;
        }
        if (chained) continue;

        Polynomial r = normal_form(s_polynomial(G[pr.first], G[pr.second]), G);
        if (!r.is_zero()) {
            G.push_back(r.monic());
            push_pairs(G.size() - 1);
        }
    }

    // minimalize: drop elements whose leading term another one divides
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& a = G[j].leading_monomial();
            const Monomial& b = G[i].leading_monomial();
            if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    detail::interreduce(minimal);
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(), b.leading_monomial());
    });
    return minimal;
}

/// An ideal of S given by generators, with its reduced Gröbner basis
/// computed on first use and cached. The cache is written once; afterwards
/// all queries are read-only.
class Ideal {
public:
    Ideal(const PolynomialRing& ring, std::vector<Polynomial> gens)
        : ring_(&ring), generators_(std::move(gens)) {}

    /// Wrap a basis that is already reduced for this ring's order.
    static Ideal from_reduced_basis(const PolynomialRing& ring, std::vector<Polynomial> basis) {
        Ideal I(ring, basis);
        I.basis_ = std::move(basis);
        return I;
    }

    const PolynomialRing& ring() const noexcept { return *ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }

    const std::vector<Polynomial>& reduced_basis() const {
        if (!basis_) basis_ = buchberger(*ring_, generators_);
        return *basis_;
    }

    bool contains(const Polynomial& f) const { return normal_form(f, reduced_basis()).is_zero(); }

    bool is_unit() const {
        const auto& B = reduced_basis();
        return B.size() == 1 && B.front().size() == 1 && B.front().leading_monomial().is_one();
    }

    bool is_zero_ideal() const { return reduced_basis().empty(); }

    /// All reduced-basis elements homogeneous (vacuously true for <0>).
    bool is_graded() const {
        for (const Polynomial& g : reduced_basis())
            if (!g.is_homogeneous()) return false;
        return true;
    }

    friend bool same_ideal(const Ideal& I, const Ideal& J) {
        const auto& A = I.reduced_basis();
        const auto& B = J.reduced_basis();
        if (A.size() != B.size()) return false;
        for (std::size_t i = 0; i < A.size(); ++i)
            if (!(A[i] == B[i])) return false;
        return true;
    }

private:
    const PolynomialRing* ring_;
    std::vector<Polynomial> generators_;
    mutable std::optional<std::vector<Polynomial>> basis_;
};

inline bool ideal_member(const Polynomial& f, const Ideal& I) { return I.contains(f); }

namespace detail {

/// Carries the auxiliary-variable ring used by intersections; w sits at
/// index 0 and is eliminated by the block order.
struct ExtendedRing {
    FieldContext const* field;
    PolynomialRing ring;

    explicit ExtendedRing(const PolynomialRing& base)
        : field(base.field), ring(*base.field, base.nvars + 1, TermOrder::elimination(1)) {}

    Polynomial lift(const Polynomial& f) const {
        std::vector<Term> terms;
        terms.reserve(f.size());
        for (const auto& t : f.terms()) {
            std::vector<std::uint32_t> e;
            e.reserve(t.mono.exponents().size() + 1);
            e.push_back(0);
            e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial(ring, std::move(terms));
    }

    Polynomial w() const { return Polynomial::term(ring, Monomial::variable(ring.nvars, 0), field->one()); }

    bool w_free(const Polynomial& f) const {
        for (const auto& t : f.terms())
            if (t.mono.exponent(0) != 0) return false;
        return true;
    }

    Polynomial project(const Polynomial& f, const PolynomialRing& base) const {
        std::vector<Term> terms;
        terms.reserve(f.size());
        for (const auto& t : f.terms()) {
            std::vector<std::uint32_t> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial(base, std::move(terms));
    }
};

}  // namespace detail

/// I ∩ J via the auxiliary-variable construction <w·I, (1-w)·J> ∩ S with
/// an elimination order on w. The extended ring never escapes; the result
/// is returned over the base ring.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
    if (!I.ring().same(J.ring())) fail("RingMismatch", "ideals live in different rings");
    const PolynomialRing& base = I.ring();
    detail::ExtendedRing ext(base);
    Polynomial w = ext.w();
    Polynomial one_minus_w = Polynomial::constant(ext.ring, ext.field->one()) - w;
    std::vector<Polynomial> gens;
    for (const Polynomial& f : I.generators()) gens.push_back(w * ext.lift(f));
    for (const Polynomial& g : J.generators()) gens.push_back(one_minus_w * ext.lift(g));
    std::vector<Polynomial> elim = buchberger(ext.ring, gens);
    std::vector<Polynomial> result;
    for (const Polynomial& g : elim)
        if (ext.w_free(g)) result.push_back(ext.project(g, base));
    return Ideal(base, std::move(result));
}

/// (I : t_i) for a 1-based variable index, computed as intersect(I, <t_i>)
/// with every basis element divided by t_i.
inline Ideal colon_by_variable(const Ideal& I, int var) {
    const PolynomialRing& base = I.ring();
    if (var < 1 || var > base.nvars) fail("DimensionMismatch", "variable index out of range");
    Monomial ti = Monomial::variable(base.nvars, var - 1);
    Ideal principal(base, {Polynomial::term(base, ti, base.field->one())});
    Ideal meet = intersect(I, principal);
    std::vector<Polynomial> quotient;
    for (const Polynomial& g : meet.reduced_basis()) {
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            if (!ti.divides(t.mono))
                fail("InternalInconsistency", "element of I ∩ <t_i> not divisible by t_i");
            terms.push_back({ti.divide_into(t.mono), t.coeff});
        }
        quotient.push_back(Polynomial(base, std::move(terms)));
    }
    return Ideal(base, std::move(quotient));
}

/// Krull dimension of S/I: the largest number of variables U such that no
/// leading-term monomial of the reduced basis is supported entirely on U.
/// Exhaustive over variable subsets (s stays small here).
inline int krull_dimension(const Ideal& I) {
    if (I.is_unit()) fail("UnitIdeal", "S/I is the zero ring");
    int s = I.ring().nvars;
    std::vector<Monomial> lms;
    for (const Polynomial& g : I.reduced_basis()) lms.push_back(g.leading_monomial());
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        bool independent = true;
        for (const Monomial& m : lms) {
            bool supported = true;
            for (int i = 0; i < s && supported; ++i)
                if (m.exponent(i) > 0 && !(mask & (1u << i))) supported = false;
            if (supported) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, std::popcount(mask));
    }
    return best;
}

/// All projective points (canonical representatives) at which every
/// reduced-basis element vanishes. Requires a graded ideal.
inline PointSet zero_set_projective(const Ideal& I,
                                    std::size_t bound = default_enumeration_bound) {
    const PolynomialRing& ring = I.ring();
    const FieldContext& F = *ring.field;
    if (!I.is_graded()) fail("NotGraded", "zero set needs a graded ideal");
    int s = ring.nvars;
    std::uint64_t count = 0, power = 1;
    for (int i = 0; i < s; ++i) {
        count += power;
        power *= F.p();
    }
    if (count > bound)
        fail("EnumerationTooLarge", "projective space has " + std::to_string(count) + " points");
    const auto& basis = I.reduced_basis();
    PointSet out(F, s, Ambient::projective);
    // canonical representatives: zeros, then a leading 1, then free entries
    for (int k = 0; k < s; ++k) {
        int free = s - k - 1;
        std::uint64_t total = 1;
        for (int i = 0; i < free; ++i) total *= F.p();
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            Coords c(static_cast<std::size_t>(s), F.zero());
            c[static_cast<std::size_t>(k)] = F.one();
            std::uint64_t rest = idx;
            for (int i = 0; i < free; ++i) {
                c[static_cast<std::size_t>(k + 1 + i)] = {static_cast<std::uint32_t>(rest % F.p())};
                rest /= F.p();
            }
            bool vanishes = true;
            for (const Polynomial& g : basis) {
                if (g.evaluate(c).value != 0) {
                    vanishes = false;
                    break;
                }
            }
            if (vanishes) out.insert(ProjectivePoint::from_canonical(std::move(c)));
        }
    }
    return out;
}

/// Affine analogue: all points of A^s annihilating the reduced basis.
inline PointSet zero_set_affine(const Ideal& I, std::size_t bound = default_enumeration_bound) {
    const PolynomialRing& ring = I.ring();
    const FieldContext& F = *ring.field;
    int s = ring.nvars;
    std::uint64_t total = 1;
    for (int i = 0; i < s; ++i) {
        total *= F.p();
        if (total > bound)
            fail("EnumerationTooLarge", "affine space is larger than " + std::to_string(bound));
    }
    const auto& basis = I.reduced_basis();
    PointSet out(F, s, Ambient::affine);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Coords c(static_cast<std::size_t>(s), F.zero());
        std::uint64_t rest = idx;
        for (int i = 0; i < s; ++i) {
            c[static_cast<std::size_t>(i)] = {static_cast<std::uint32_t>(rest % F.p())};
            rest /= F.p();
        }
        bool vanishes = true;
        for (const Polynomial& g : basis) {
            if (g.evaluate(c).value != 0) {
                vanishes = false;
                break;
            }
        }
        if (vanishes) out.insert(AffinePoint(std::move(c)));
    }
    return out;
}

}  // namespace binomideal
