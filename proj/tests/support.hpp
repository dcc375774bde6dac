#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "binomideal/binomideal.hpp"

namespace testsupport {

using namespace binomideal;

inline ProjectivePoint pp(const FieldContext& F, std::initializer_list<std::int64_t> raw) {
    Coords c;
    for (auto v : raw) c.push_back(F.element(v));
    return ProjectivePoint::normalize(F, c);
}

inline AffinePoint ap(const FieldContext& F, std::initializer_list<std::int64_t> raw) {
    Coords c;
    for (auto v : raw) c.push_back(F.element(v));
    return AffinePoint(std::move(c));
}

inline PointSet proj_set(const FieldContext& F, int s,
                         std::initializer_list<std::initializer_list<std::int64_t>> pts) {
    PointSet Y(F, s, Ambient::projective);
    for (auto raw : pts) Y.insert(pp(F, raw));
    return Y;
}

inline PointSet affine_set(const FieldContext& F, int s,
                           std::initializer_list<std::initializer_list<std::int64_t>> pts) {
    PointSet Y(F, s, Ambient::affine);
    for (auto raw : pts) Y.insert(ap(F, raw));
    return Y;
}

/// All canonical representatives of P^{s-1}(GF(p)), enumerated directly so
/// tests stay independent of the zero-set machinery.
inline std::vector<ProjectivePoint> all_projective_points(const FieldContext& F, int s) {
    std::vector<ProjectivePoint> out;
    for (int k = 0; k < s; ++k) {
        std::uint64_t total = 1;
        for (int i = 0; i < s - k - 1; ++i) total *= F.p();
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            Coords c(static_cast<std::size_t>(s), F.zero());
            c[static_cast<std::size_t>(k)] = F.one();
            std::uint64_t rest = idx;
            for (int i = k + 1; i < s; ++i) {
                c[static_cast<std::size_t>(i)] = {static_cast<std::uint32_t>(rest % F.p())};
                rest /= F.p();
            }
            out.push_back(ProjectivePoint::from_canonical(std::move(c)));
        }
    }
    return out;
}

inline Polynomial parse(const PolynomialRing& ring, const std::string& text) {
    return parse_polynomial(ring, text);
}

/// Random nonempty subset of the given points.
inline PointSet random_subset(const FieldContext& F, int s,
                              const std::vector<ProjectivePoint>& pool, std::mt19937& rng) {
    PointSet Y(F, s, Ambient::projective);
    std::uniform_int_distribution<int> coin(0, 1);
    while (Y.empty()) {
        for (const auto& P : pool)
            if (coin(rng)) Y.insert(P);
    }
    return Y;
}

}  // namespace testsupport
