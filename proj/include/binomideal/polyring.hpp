#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "binomideal/field.hpp"
#include "binomideal/monomial.hpp"
#include "binomideal/points.hpp"

namespace binomideal {

/// Ring context for S = GF(p)[t_1,...,t_s] under a fixed term order.
struct PolynomialRing {
    const FieldContext* field = nullptr;
    int nvars = 0;
    TermOrder order = TermOrder::grevlex();

    PolynomialRing(const FieldContext& F, int s, TermOrder ord = TermOrder::grevlex())
        : field(&F), nvars(s), order(ord) {}

    bool same(const PolynomialRing& o) const {
        return field->p() == o.field->p() && nvars == o.nvars && order == o.order;
    }
};

struct Term {
    Monomial mono;
    FieldElement coeff;
};

enum class BinomialShape { pure_binomial, non_pure_binomial, monomial, other };

/// Sparse polynomial: terms kept strictly descending in the ring's order,
/// never storing a zero coefficient.
class Polynomial {
public:
    explicit Polynomial(const PolynomialRing& ring) : ring_(&ring) {}

    Polynomial(const PolynomialRing& ring, std::vector<Term> terms) : ring_(&ring) {
        for (auto& t : terms)
            if (t.coeff.value != 0) accumulate(t.mono, t.coeff);
    }

    static Polynomial zero(const PolynomialRing& ring) { return Polynomial(ring); }

    static Polynomial constant(const PolynomialRing& ring, FieldElement c) {
        Polynomial f(ring);
        if (c.value != 0) f.terms_.push_back({Monomial::one(ring.nvars), c});
        return f;
    }

    static Polynomial term(const PolynomialRing& ring, Monomial m, FieldElement c) {
        Polynomial f(ring);
        if (c.value != 0) f.terms_.push_back({std::move(m), c});
        return f;
    }

    const PolynomialRing& ring() const noexcept { return *ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    const Monomial& leading_monomial() const { return terms_.front().mono; }
    FieldElement leading_coeff() const { return terms_.front().coeff; }

    FieldElement coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coeff;
        return {0};
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        f.check_ring(g);
        Polynomial out(*f.ring_);
        out.terms_ = merge(f, g, false);
        return out;
    }

    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
        f.check_ring(g);
        Polynomial out(*f.ring_);
        out.terms_ = merge(f, g, true);
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(*ring_);
        out.terms_ = terms_;
        for (auto& t : out.terms_) t.coeff = field().neg(t.coeff);
        return out;
    }

    /// c * f.
    Polynomial scale(FieldElement c) const {
        Polynomial out(*ring_);
        if (c.value == 0) return out;
        out.terms_ = terms_;
        for (auto& t : out.terms_) t.coeff = field().mul(c, t.coeff);
        return out;
    }

    /// (c * t^m) * f.
    Polynomial times_term(const Monomial& m, FieldElement c) const {
        Polynomial out(*ring_);
        if (c.value == 0) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) out.terms_.push_back({t.mono * m, field().mul(c, t.coeff)});
        return out;  // multiplication by a monomial preserves the term order
    }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        f.check_ring(g);
        Polynomial out(*f.ring_);
        for (const auto& t : f.terms_) out = out + g.times_term(t.mono, t.coeff);
        return out;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scale(field().inv(leading_coeff()));
    }

    /// Degree when all terms share it (0 for the zero polynomial), else absent.
    std::optional<std::uint32_t> homogeneous_degree() const {
        if (terms_.empty()) return 0;
        std::uint32_t d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return std::nullopt;
        return d;
    }

    bool is_homogeneous() const { return homogeneous_degree().has_value(); }

    FieldElement evaluate(const Coords& x) const {
        if (static_cast<int>(x.size()) != ring_->nvars)
            fail("DimensionMismatch", "point has wrong number of coordinates");
        const FieldContext& F = field();
        FieldElement acc{0};
        for (const auto& t : terms_) {
            FieldElement v = t.coeff;
            for (int i = 0; i < ring_->nvars; ++i) {
                std::uint32_t e = t.mono.exponent(i);
                if (e != 0) v = F.mul(v, F.pow(x[static_cast<std::size_t>(i)], e));
            }
            acc = F.add(acc, v);
        }
        return acc;
    }

    FieldElement evaluate(const AffinePoint& P) const { return evaluate(P.coords()); }

    /// Vanishing of a homogeneous polynomial at a projective class; well
    /// defined on the canonical representative since f(c·α) = c^d f(α).
    bool vanishes_at_projective(const ProjectivePoint& P) const {
        if (!is_homogeneous())
            fail("NotHomogeneous", "projective vanishing needs a homogeneous polynomial");
        return evaluate(P.coords()).value == 0;
    }

    BinomialShape binomial_shape() const {
        if (terms_.size() == 1) return BinomialShape::monomial;
        if (terms_.size() == 2) {
            // c·(t^a - t^b) <=> the two coefficients are negatives of each other
            FieldElement a = terms_[0].coeff;
            FieldElement b = terms_[1].coeff;
            return field().add(a, b).value == 0 ? BinomialShape::pure_binomial
                                                : BinomialShape::non_pure_binomial;
        }
        return BinomialShape::other;
    }

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        if (!f.ring_->same(*g.ring_)) return false;
        if (f.terms_.size() != g.terms_.size()) return false;
        for (std::size_t i = 0; i < f.terms_.size(); ++i)
            if (!(f.terms_[i].mono == g.terms_[i].mono) ||
                f.terms_[i].coeff != g.terms_[i].coeff)
                return false;
        return true;
    }

private:
    const FieldContext& field() const noexcept { return *ring_->field; }

    void check_ring(const Polynomial& g) const {
        if (!ring_->same(*g.ring_))
            fail("RingMismatch", "polynomials belong to different rings");
    }

    void accumulate(const Monomial& m, FieldElement c) {
        // insertion keeping descending order; used only for construction
        auto it = terms_.begin();
        while (it != terms_.end() && ring_->order.greater(it->mono, m)) ++it;
        if (it != terms_.end() && it->mono == m) {
            it->coeff = field().add(it->coeff, c);
            if (it->coeff.value == 0) terms_.erase(it);
        } else {
            terms_.insert(it, {m, c});
        }
    }

    static std::vector<Term> merge(const Polynomial& f, const Polynomial& g, bool subtract) {
        const FieldContext& F = f.field();
        const TermOrder& ord = f.ring_->order;
        std::vector<Term> out;
        out.reserve(f.terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < f.terms_.size() || j < g.terms_.size()) {
            if (j == g.terms_.size()) {
                out.push_back(f.terms_[i++]);
            } else if (i == f.terms_.size()) {
                Term t = g.terms_[j++];
                if (subtract) t.coeff = F.neg(t.coeff);
                out.push_back(t);
            } else {
                auto cmp = ord.compare(f.terms_[i].mono, g.terms_[j].mono);
                if (cmp == std::strong_ordering::greater) {
                    out.push_back(f.terms_[i++]);
                } else if (cmp == std::strong_ordering::less) {
                    Term t = g.terms_[j++];
                    if (subtract) t.coeff = F.neg(t.coeff);
                    out.push_back(t);
                } else {
                    FieldElement c = subtract ? F.sub(f.terms_[i].coeff, g.terms_[j].coeff)
                                              : F.add(f.terms_[i].coeff, g.terms_[j].coeff);
                    if (c.value != 0) out.push_back({f.terms_[i].mono, c});
                    ++i;
                    ++j;
                }
            }
        }
        return out;
    }

    const PolynomialRing* ring_;
    std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Text grammar: terms joined by '+'/'-'; a term is an optional integer
// coefficient and '*'-separated powers tK^E, e.g. "t1^2*t2 - 3*t3^3".
// Coefficients are reduced mod p; rendering uses the symmetric residue
// (so 2 mod 3 prints as "- ...").
// ---------------------------------------------------------------------------

inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const std::uint32_t p = f.ring().field->p();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::uint32_t c = t.coeff.value;
        bool negative = 2 * c > p;
        std::uint32_t mag = negative ? p - c : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string factors;
        for (int i = 0; i < t.mono.nvars(); ++i) {
            std::uint32_t e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += "t" + std::to_string(i + 1);
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out += std::to_string(mag);
        } else if (mag != 1) {
            out += std::to_string(mag) + "*" + factors;
        } else {
            out += factors;
        }
    }
    return out;
}

namespace detail {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;
    const PolynomialRing& ring;

    explicit PolyParser(std::string_view t, const PolynomialRing& r) : text(t), ring(r) {}

    [[noreturn]] void error(const std::string& what) const {
        fail("ParseError", what + " at column " + std::to_string(pos + 1));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::int64_t integer() {
        std::size_t start = pos;
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (std::int64_t{1} << 40)) error("integer literal too large");
            ++pos;
        }
        if (pos == start) error("expected an integer");
        return v;
    }

    Polynomial parse() {
        Polynomial out = Polynomial::zero(ring);
        skip_ws();
        if (pos == text.size()) error("empty polynomial");
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        while (true) {
            out = out + parse_term(negative);
            skip_ws();
            if (pos == text.size()) break;
            if (eat('+'))
                negative = false;
            else if (eat('-'))
                negative = true;
            else
                error("expected '+' or '-'");
        }
        return out;
    }

    Polynomial parse_term(bool negative) {
        const FieldContext& F = *ring.field;
        skip_ws();
        FieldElement coeff = F.one();
        std::vector<std::uint32_t> exps(static_cast<std::size_t>(ring.nvars), 0);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coeff = F.mul(coeff, F.element(integer()));
                saw_factor = true;
            } else if (eat('t')) {
                std::int64_t idx = integer();
                if (idx < 1 || idx > ring.nvars)
                    error("variable t" + std::to_string(idx) + " outside t1..t" +
                          std::to_string(ring.nvars));
                std::int64_t e = 1;
                if (eat('^')) e = integer();
                if (e < 0 || e > Monomial::max_exponent) error("exponent out of range");
                exps[static_cast<std::size_t>(idx - 1)] += static_cast<std::uint32_t>(e);
                saw_factor = true;
            } else {
                error("expected a coefficient or a variable power");
            }
            skip_ws();
            if (!eat('*')) break;
        }
        if (!saw_factor) error("empty term");
        if (negative) coeff = F.neg(coeff);
        return Polynomial::term(ring, Monomial(std::move(exps)), coeff);
    }
};

}  // namespace detail

inline Polynomial parse_polynomial(const PolynomialRing& ring, std::string_view text) {
    return detail::PolyParser(text, ring).parse();
}

}  // namespace binomideal
