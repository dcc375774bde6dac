#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "binomideal/error.hpp"

namespace binomideal {

/// A residue of GF(p). Plain value type; arithmetic goes through FieldContext.
struct FieldElement {
    std::uint32_t value = 0;

    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

namespace detail {

// gcd-based inverse modulo an arbitrary modulus (used for exponent arithmetic
// modulo p-1, which is composite).
inline std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1 = 0, y1 = 0;
    std::int64_t g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t x = 0, y = 0;
    std::int64_t g = egcd(((a % m) + m) % m, m, x, y);
    if (g != 1) fail("InternalInconsistency", "element not invertible modulo " + std::to_string(m));
    return ((x % m) + m) % m;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// Exact arithmetic in GF(p) for a prime p, together with the discrete-log
/// machinery on the cyclic group GF(p)*.
///
/// The context is immutable after construction and safe to share across
/// threads; every operation is a pure function of its arguments.
class FieldContext {
public:
    static constexpr std::uint32_t max_prime = 46337;  // p^2 fits in 32 bits
    static constexpr std::uint32_t log_table_limit = 1u << 16;

    explicit FieldContext(std::uint32_t p) : p_(p) {
        if (p < 2 || p > max_prime || !is_prime(p))
            fail("NotPrime", "p = " + std::to_string(p) + " is not a prime in [2, " +
                                 std::to_string(max_prime) + "]");
        unit_factors_ = detail::prime_factors(p_ - 1);
        g_ = find_primitive_root();
        if (p_ <= log_table_limit) build_log_table();
    }

    std::uint32_t p() const noexcept { return p_; }
    FieldElement generator() const noexcept { return {g_}; }
    bool has_log_table() const noexcept { return !log_table_.empty(); }

    FieldElement element(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r)};
    }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1 % p_}; }

    FieldElement add(FieldElement a, FieldElement b) const {
        std::uint32_t s = a.value + b.value;
        if (s >= p_) s -= p_;
        return {s};
    }

    FieldElement sub(FieldElement a, FieldElement b) const {
        return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
    }

    FieldElement neg(FieldElement a) const { return {a.value == 0 ? 0u : p_ - a.value}; }

    FieldElement mul(FieldElement a, FieldElement b) const {
        return {static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a.value) * b.value) % p_)};
    }

    FieldElement pow(FieldElement a, std::int64_t e) const {
        if (a.value == 0) {
            if (e < 0) fail("ZeroInversion", "0 raised to a negative power");
            return e == 0 ? one() : zero();
        }
        std::int64_t m = p_ - 1;
        std::int64_t r = e % m;
        if (r < 0) r += m;
        FieldElement result = one();
        FieldElement base = a;
        while (r > 0) {
            if (r & 1) result = mul(result, base);
            base = mul(base, base);
            r >>= 1;
        }
        return result;
    }

    FieldElement inv(FieldElement a) const {
        if (a.value == 0) fail("ZeroInversion", "attempt to invert 0 in GF(" + std::to_string(p_) + ")");
        return pow(a, static_cast<std::int64_t>(p_) - 2);
    }

    /// Multiplicative order of a nonzero element.
    std::int64_t order(FieldElement a) const {
        if (a.value == 0) fail("ZeroInversion", "0 has no multiplicative order");
        std::int64_t m = p_ - 1;
        for (std::int64_t q : unit_factors_) {
            while (m % q == 0 && pow(a, m / q).value == 1) m /= q;
        }
        return m;
    }

    /// Exponent k in [0, order(base)) with base^k = target.
    /// Uses the precomputed log table when available, baby-step/giant-step
    /// otherwise; the two paths return the same unique exponent.
    std::int64_t discrete_log(FieldElement base, FieldElement target) const {
        if (base.value == 0 || target.value == 0)
            fail("NotInSubgroup", "discrete log requires nonzero base and target");
        if (has_log_table()) {
            std::int64_t m = p_ - 1;
            std::int64_t x = log_table_[base.value];
            std::int64_t y = log_table_[target.value];
            std::int64_t d = std::gcd(x == 0 ? m : x, m);
            if (y % d != 0)
                fail("NotInSubgroup", "target is not a power of the base");
            if (x == 0) return 0;  // base = 1, target = 1
            std::int64_t mm = m / d;
            return (y / d) % mm * detail::mod_inverse(x / d, mm) % mm;
        }
        return bsgs_log(base, target);
    }

    /// Baby-step/giant-step discrete log, independent of the table path.
    std::int64_t bsgs_log(FieldElement base, FieldElement target) const {
        if (base.value == 0 || target.value == 0)
            fail("NotInSubgroup", "discrete log requires nonzero base and target");
        std::int64_t ord = order(base);
        std::int64_t m = 1;
        while (m * m < ord) ++m;
        std::vector<std::pair<std::uint32_t, std::int64_t>> baby;
        baby.reserve(static_cast<std::size_t>(m));
        FieldElement cur = one();
        for (std::int64_t j = 0; j < m; ++j) {
            baby.emplace_back(cur.value, j);
            cur = mul(cur, base);
        }
        std::sort(baby.begin(), baby.end());
        FieldElement giant = inv(pow(base, m));
        FieldElement gamma = target;
        for (std::int64_t i = 0; i * m < ord; ++i) {
            auto it = std::lower_bound(baby.begin(), baby.end(),
                                       std::make_pair(gamma.value, std::int64_t{-1}));
            if (it != baby.end() && it->first == gamma.value) {
                std::int64_t k = i * m + it->second;
                if (k < ord) return k;
            }
            gamma = mul(gamma, giant);
        }
        fail("NotInSubgroup", "target is not a power of the base");
    }

    /// Smallest x in GF(p)* with x^n = a; NoRoot when a is not an n-th power.
    FieldElement nth_root(FieldElement a, std::int64_t n) const {
        if (a.value == 0) fail("NoRoot", "root of 0 requested");
        if (n < 1) fail("NoRoot", "root index must be >= 1");
        std::int64_t m = p_ - 1;
        std::int64_t y = discrete_log(generator(), a);
        std::int64_t nr = n % m;
        if (nr == 0) {
            // x^n = 1 for every unit; solvable only for a = 1
            if (a.value != 1) fail("NoRoot", "element is not an n-th power");
            return one();
        }
        std::int64_t d = std::gcd(nr, m);
        if (y % d != 0) fail("NoRoot", "element is not an n-th power");
        std::int64_t mm = m / d;
        std::int64_t k0 = (y / d) % mm * detail::mod_inverse(nr / d, mm) % mm;
        FieldElement best = pow(generator(), k0);
        FieldElement step = pow(generator(), mm);
        FieldElement cur = best;
        for (std::int64_t t = 1; t < d; ++t) {
            cur = mul(cur, step);
            if (cur.value < best.value) best = cur;
        }
        return best;
    }

    /// The unique subgroup {x : x^d = 1} of GF(p)*, sorted by residue.
    std::vector<FieldElement> subgroup_of_order(std::int64_t d) const {
        if (d < 1 || (static_cast<std::int64_t>(p_) - 1) % d != 0)
            fail("InvalidOrder", std::to_string(d) + " does not divide p-1");
        FieldElement h = pow(generator(), (p_ - 1) / d);
        std::vector<FieldElement> out;
        out.reserve(static_cast<std::size_t>(d));
        FieldElement cur = one();
        for (std::int64_t k = 0; k < d; ++k) {
            out.push_back(cur);
            cur = mul(cur, h);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t q = 2; q * q <= n; ++q)
            if (n % q == 0) return false;
        return true;
    }

private:
    std::uint32_t find_primitive_root() const {
        if (p_ == 2) return 1;
        for (std::uint32_t c = 2; c < p_; ++c) {
            FieldElement cand{c};
            bool ok = true;
            for (std::int64_t q : unit_factors_) {
                if (pow(cand, (p_ - 1) / q).value == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) return c;
        }
        fail("InternalInconsistency", "no primitive root found");
    }

    void build_log_table() {
        log_table_.assign(p_, 0);
        FieldElement cur = one();
        for (std::uint32_t k = 0; k + 1 < p_; ++k) {
            log_table_[cur.value] = k;
            cur = mul(cur, FieldElement{g_});
        }
    }

    std::uint32_t p_;
    std::uint32_t g_ = 1;
    std::vector<std::int64_t> unit_factors_;   // prime factors of p-1
    std::vector<std::int64_t> log_table_;      // log_table_[g^k] = k
};

// Free functions mirroring the operation names used elsewhere.
inline FieldElement inv(const FieldContext& F, FieldElement a) { return F.inv(a); }

inline std::int64_t discrete_log(const FieldContext& F, FieldElement base, FieldElement target) {
    return F.discrete_log(base, target);
}

inline FieldElement nth_root(const FieldContext& F, FieldElement a, std::int64_t n) {
    return F.nth_root(a, n);
}

inline std::vector<FieldElement> subgroup_of_order(const FieldContext& F, std::int64_t d) {
    return F.subgroup_of_order(d);
}

}  // namespace binomideal
