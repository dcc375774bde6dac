#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "binomideal/error.hpp"

namespace binomideal {

/// t^a for an exponent vector a in N^s, with the total degree cached.
class Monomial {
public:
    static constexpr std::uint32_t max_exponent = 1u << 16;

    Monomial() = default;

    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
        for (std::uint32_t e : exps_) {
            if (e > max_exponent) fail("ExponentOverflow", "exponent exceeds 2^16");
            degree_ += e;
        }
    }

    static Monomial one(int nvars) {
        return Monomial(std::vector<std::uint32_t>(static_cast<std::size_t>(nvars), 0));
    }

    /// t_i (0-based variable index).
    static Monomial variable(int nvars, int i) {
        std::vector<std::uint32_t> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return Monomial(std::move(e));
    }

    int nvars() const noexcept { return static_cast<int>(exps_.size()); }
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    bool is_one() const noexcept { return degree_ == 0; }

    Monomial operator*(const Monomial& other) const {
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i] + other.exps_[i];
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    /// m / this, assuming divisibility.
    Monomial divide_into(const Monomial& m) const {
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = m.exps_[i] - exps_[i];
        return Monomial(std::move(e));
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        std::vector<std::uint32_t> e(a.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
        return Monomial(std::move(e));
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

/// A multiplicative total order on monomials with 1 minimal.
/// Graded reverse lexicographic is the default everywhere; lex is offered
/// on the CLI; the elimination block order only appears inside the
/// Gröbner engine's auxiliary-variable constructions.
class TermOrder {
public:
    enum class Kind { grevlex, lex, elimination };

    static TermOrder grevlex() { return TermOrder(Kind::grevlex, 0); }
    static TermOrder lex() { return TermOrder(Kind::lex, 0); }

    /// Block order: the first `block` variables dominate (compared grevlex),
    /// ties broken grevlex on the remaining variables.
    static TermOrder elimination(int block) { return TermOrder(Kind::elimination, block); }

    Kind kind() const noexcept { return kind_; }
    int block() const noexcept { return block_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::grevlex:
                return grevlex_compare(a.exponents(), b.exponents(), 0, a.nvars());
            case Kind::lex:
                return lex_compare(a.exponents(), b.exponents());
            case Kind::elimination: {
                auto head = grevlex_compare(a.exponents(), b.exponents(), 0, block_);
                if (head != std::strong_ordering::equal) return head;
                return grevlex_compare(a.exponents(), b.exponents(), block_, a.nvars());
            }
        }
        return std::strong_ordering::equal;
    }

    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }

    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    friend bool operator==(const TermOrder& a, const TermOrder& b) {
        return a.kind_ == b.kind_ && a.block_ == b.block_;
    }

    std::string name() const {
        switch (kind_) {
            case Kind::grevlex: return "grevlex";
            case Kind::lex: return "lex";
            case Kind::elimination: return "elimination(" + std::to_string(block_) + ")";
        }
        return "?";
    }

private:
    TermOrder(Kind kind, int block) : kind_(kind), block_(block) {}

    static std::strong_ordering grevlex_compare(const std::vector<std::uint32_t>& a,
                                                const std::vector<std::uint32_t>& b, int lo,
                                                int hi) {
        std::int64_t da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a[static_cast<std::size_t>(i)];
            db += b[static_cast<std::size_t>(i)];
        }
        if (da != db) return da <=> db;
        for (int i = hi - 1; i >= lo; --i) {
            std::uint32_t ea = a[static_cast<std::size_t>(i)];
            std::uint32_t eb = b[static_cast<std::size_t>(i)];
            if (ea != eb) return eb <=> ea;  // smaller trailing exponent is larger
        }
        return std::strong_ordering::equal;
    }

    static std::strong_ordering lex_compare(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }

    Kind kind_;
    int block_;
};

}  // namespace binomideal
