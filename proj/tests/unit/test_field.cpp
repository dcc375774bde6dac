#include "doctest.h"
#include "support.hpp"

using namespace binomideal;

namespace {

// brute-force oracles, used to freeze expected values
std::uint32_t brute_inverse(std::uint32_t p, std::uint32_t a) {
    for (std::uint32_t x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    return 0;
}

std::vector<std::uint32_t> brute_subgroup(std::uint32_t p, std::uint32_t d) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 1; x < p; ++x) {
        std::uint64_t v = 1;
        for (std::uint32_t k = 0; k < d; ++k) v = v * x % p;
        if (v == 1) out.push_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("prime validation") {
    CHECK_NOTHROW(FieldContext(2));
    CHECK_NOTHROW(FieldContext(46337));
    CHECK_THROWS_WITH_AS(FieldContext(4), doctest::Contains("NotPrime"), Error);
    CHECK_THROWS_AS(FieldContext(1), Error);
    CHECK_THROWS_AS(FieldContext(46349), Error);  // prime but above the bound
}

TEST_CASE("inverse") {
    FieldContext F7(7);
    CHECK(F7.inv({1}).value == 1);
    CHECK(F7.inv({3}).value == 5);  // 3*5 = 15 = 1 mod 7
    FieldContext F5(5);
    CHECK(F5.inv({4}).value == 4);  // 4*4 = 16 = 1 mod 5
    CHECK_THROWS_WITH_AS(F5.inv({0}), doctest::Contains("ZeroInversion"), Error);

    for (std::uint32_t p : {3u, 5u, 7u, 11u, 101u}) {
        FieldContext F(p);
        for (std::uint32_t a = 1; a < p; ++a) {
            FieldElement inv_a = F.inv({a});
            CHECK(inv_a.value == brute_inverse(p, a));
            CHECK(F.mul({a}, inv_a).value == 1);
            CHECK(F.inv(inv_a).value == a);
        }
    }
}

TEST_CASE("fermat little theorem") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 101u}) {
        FieldContext F(p);
        for (std::uint32_t a = 1; a < p; ++a) CHECK(F.pow({a}, p - 1).value == 1);
    }
}

TEST_CASE("primitive root generates the unit group") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 31u, 101u, 257u}) {
        FieldContext F(p);
        std::vector<bool> seen(p, false);
        FieldElement cur = F.one();
        for (std::uint32_t k = 0; k + 1 < p; ++k) {
            CHECK(!seen[cur.value]);
            seen[cur.value] = true;
            cur = F.mul(cur, F.generator());
        }
    }
}

TEST_CASE("discrete log") {
    FieldContext F7(7);
    CHECK(F7.discrete_log({3}, {1}) == 0);
    CHECK(F7.discrete_log({3}, {2}) == 2);  // 3^2 = 9 = 2 mod 7
    FieldContext F5(5);
    CHECK_THROWS_WITH_AS(F5.discrete_log({4}, {2}), doctest::Contains("NotInSubgroup"), Error);

    // round trip + agreement of the table and baby-step/giant-step paths
    for (std::uint32_t p : {7u, 11u, 13u, 101u}) {
        FieldContext F(p);
        for (std::uint32_t b = 1; b < p; ++b) {
            std::int64_t ord = F.order({b});
            for (std::uint32_t t = 1; t < p; ++t) {
                // t lies in <b> exactly when t^ord(b) = 1 (cyclic group)
                if (F.pow({t}, ord).value == 1) {
                    std::int64_t k = F.discrete_log({b}, {t});
                    CHECK(k >= 0);
                    CHECK(k < ord);
                    CHECK(F.pow({b}, k).value == t);
                    CHECK(F.bsgs_log({b}, {t}) == k);
                } else {
                    CHECK_THROWS_AS(F.discrete_log({b}, {t}), Error);
                }
            }
        }
    }
}

TEST_CASE("nth root") {
    FieldContext F7(7);
    CHECK(F7.nth_root({1}, 3).value == 1);
    CHECK(F7.nth_root({2}, 2).value == 3);  // 3^2 = 2 and 4^2 = 2; smallest wins
    FieldContext F5(5);
    CHECK_THROWS_WITH_AS(F5.nth_root({2}, 2), doctest::Contains("NoRoot"), Error);

    // oracle: smallest root by exhaustive search
    for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
        FieldContext F(p);
        for (std::int64_t n = 1; n <= 6; ++n) {
            for (std::uint32_t a = 1; a < p; ++a) {
                std::uint32_t expect = 0;
                for (std::uint32_t x = 1; x < p && expect == 0; ++x)
                    if (F.pow({x}, n).value == a) expect = x;
                if (expect == 0) {
                    CHECK_THROWS_AS(F.nth_root({a}, n), Error);
                } else {
                    CHECK(F.nth_root({a}, n).value == expect);
                }
            }
        }
    }
}

TEST_CASE("subgroup of order") {
    FieldContext F7(7);
    CHECK(F7.subgroup_of_order(1) == std::vector<FieldElement>{{1}});
    CHECK(F7.subgroup_of_order(3) == std::vector<FieldElement>{{1}, {2}, {4}});
    FieldContext F5(5);
    CHECK(F5.subgroup_of_order(2) == std::vector<FieldElement>{{1}, {4}});
    CHECK_THROWS_WITH_AS(F5.subgroup_of_order(3), doctest::Contains("InvalidOrder"), Error);

    for (std::uint32_t p : {7u, 13u, 31u}) {
        FieldContext F(p);
        for (std::int64_t d = 1; d < p; ++d) {
            if ((p - 1) % d != 0) continue;
            auto H = F.subgroup_of_order(d);
            CHECK(H.size() == static_cast<std::size_t>(d));
            std::vector<std::uint32_t> vals;
            for (auto h : H) vals.push_back(h.value);
            CHECK(vals == brute_subgroup(p, static_cast<std::uint32_t>(d)));
            // closed under product and inverse
            for (auto a : H)
                for (auto b : H) {
                    auto prod = F.mul(a, b);
                    CHECK(std::binary_search(H.begin(), H.end(), prod));
                }
            for (auto a : H) CHECK(std::binary_search(H.begin(), H.end(), F.inv(a)));
        }
    }
}
