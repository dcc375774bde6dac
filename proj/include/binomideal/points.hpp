#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binomideal/error.hpp"
#include "binomideal/field.hpp"

namespace binomideal {

using Coords = std::vector<FieldElement>;

inline std::string coords_to_string(const Coords& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c[i].value);
    }
    return out + ")";
}

/// A point of P^{s-1}(GF(p)) stored as its canonical representative:
/// the first nonzero coordinate equals 1, so equality is coordinate-wise.
class ProjectivePoint {
public:
    ProjectivePoint() = default;

    /// Canonicalize a nonzero coordinate vector.
    static ProjectivePoint normalize(const FieldContext& F, const Coords& raw) {
        std::size_t k = raw.size();
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i].value != 0) {
                k = i;
                break;
            }
        }
        if (k == raw.size()) fail("ZeroVector", "projective point needs a nonzero coordinate");
        FieldElement scale = F.inv(raw[k]);
        ProjectivePoint P;
        P.coords_.reserve(raw.size());
        for (const auto& c : raw) P.coords_.push_back(F.mul(scale, c));
        return P;
    }

    static ProjectivePoint identity(const FieldContext& F, int s) {
        ProjectivePoint P;
        P.coords_.assign(static_cast<std::size_t>(s), F.one());
        return P;
    }

    /// Wrap coordinates already in canonical form (no renormalization).
    static ProjectivePoint from_canonical(Coords c) {
        ProjectivePoint P;
        P.coords_ = std::move(c);
        return P;
    }

    const Coords& coords() const noexcept { return coords_; }
    int dimension() const noexcept { return static_cast<int>(coords_.size()); }

    bool in_torus() const {
        return std::all_of(coords_.begin(), coords_.end(),
                           [](FieldElement c) { return c.value != 0; });
    }

    friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    Coords coords_;
};

/// P^{s-1} together with the absorbing class [0].
class ExtendedPoint {
public:
    static ExtendedPoint zero() { return ExtendedPoint(); }
    explicit ExtendedPoint(ProjectivePoint p) : point_(std::move(p)) {}

    bool is_zero() const noexcept { return !point_.has_value(); }
    const ProjectivePoint& point() const { return *point_; }

    friend auto operator<=>(const ExtendedPoint&, const ExtendedPoint&) = default;

private:
    ExtendedPoint() = default;
    std::optional<ProjectivePoint> point_;
};

/// A point of A^s; zero coordinates (and the zero vector) are allowed.
class AffinePoint {
public:
    AffinePoint() = default;
    explicit AffinePoint(Coords c) : coords_(std::move(c)) {}

    static AffinePoint reduce(const FieldContext& F, const std::vector<std::int64_t>& raw) {
        Coords c;
        c.reserve(raw.size());
        for (auto v : raw) c.push_back(F.element(v));
        return AffinePoint(std::move(c));
    }

    const Coords& coords() const noexcept { return coords_; }
    int dimension() const noexcept { return static_cast<int>(coords_.size()); }

    friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;

private:
    Coords coords_;
};

/// Componentwise product on P^{s-1} ∪ {[0]}: [a]·[b] = [a·b], with [0]
/// absorbing and Zero returned when every componentwise product vanishes.
inline ExtendedPoint proj_product(const FieldContext& F, const ExtendedPoint& a,
                                  const ExtendedPoint& b) {
    if (a.is_zero() || b.is_zero()) return ExtendedPoint::zero();
    const Coords& ca = a.point().coords();
    const Coords& cb = b.point().coords();
    if (ca.size() != cb.size())
        fail("DimensionMismatch", "projective points live in different spaces");
    Coords prod(ca.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        prod[i] = F.mul(ca[i], cb[i]);
        if (prod[i].value != 0) all_zero = false;
    }
    if (all_zero) return ExtendedPoint::zero();
    return ExtendedPoint(ProjectivePoint::normalize(F, prod));
}

inline ExtendedPoint proj_product(const FieldContext& F, const ProjectivePoint& a,
                                  const ProjectivePoint& b) {
    return proj_product(F, ExtendedPoint(a), ExtendedPoint(b));
}

inline AffinePoint affine_product(const FieldContext& F, const AffinePoint& a,
                                  const AffinePoint& b) {
    const Coords& ca = a.coords();
    const Coords& cb = b.coords();
    if (ca.size() != cb.size())
        fail("DimensionMismatch", "affine points live in different spaces");
    Coords prod(ca.size());
    for (std::size_t i = 0; i < ca.size(); ++i) prod[i] = F.mul(ca[i], cb[i]);
    return AffinePoint(std::move(prod));
}

enum class Ambient { projective, affine };

/// A deduplicated, lexicographically sorted set of points sharing one
/// ambient space and field. Projective members are stored canonically.
class PointSet {
public:
    PointSet(const FieldContext& F, int s, Ambient ambient)
        : field_(&F), s_(s), ambient_(ambient) {}

    const FieldContext& field() const noexcept { return *field_; }
    int dimension() const noexcept { return s_; }
    Ambient ambient() const noexcept { return ambient_; }
    bool projective() const noexcept { return ambient_ == Ambient::projective; }

    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    const std::vector<Coords>& elements() const noexcept { return elements_; }

    bool insert(const ProjectivePoint& P) {
        if (ambient_ != Ambient::projective)
            fail("DimensionMismatch", "projective point inserted into an affine set");
        return insert_coords(P.coords());
    }

    bool insert(const AffinePoint& P) {
        if (ambient_ != Ambient::affine)
            fail("DimensionMismatch", "affine point inserted into a projective set");
        return insert_coords(P.coords());
    }

    bool contains(const Coords& c) const {
        return std::binary_search(elements_.begin(), elements_.end(), c);
    }

    ProjectivePoint projective_at(std::size_t i) const {
        return ProjectivePoint::from_canonical(elements_[i]);
    }

    AffinePoint affine_at(std::size_t i) const { return AffinePoint(elements_[i]); }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.s_ == b.s_ && a.ambient_ == b.ambient_ && a.elements_ == b.elements_;
    }

private:
    bool insert_coords(const Coords& c) {
        if (static_cast<int>(c.size()) != s_)
            fail("DimensionMismatch", "point has " + std::to_string(c.size()) +
                                          " coordinates, set expects " + std::to_string(s_));
        auto it = std::lower_bound(elements_.begin(), elements_.end(), c);
        if (it != elements_.end() && *it == c) return false;
        elements_.insert(it, c);
        return true;
    }

    const FieldContext* field_;
    int s_;
    Ambient ambient_;
    std::vector<Coords> elements_;
};

/// Outcome of a monoid / torus-subgroup test, with a concrete witness
/// of the first failing condition.
struct MonoidVerdict {
    enum class Failure { none, empty, missing_identity, not_closed, zero_coordinate };

    bool ok = false;
    Failure failure = Failure::none;
    Coords witness_a;      // a violating pair (not_closed)...
    Coords witness_b;
    Coords witness_point;  // ...or a point with a zero coordinate

    static MonoidVerdict pass() { return {true, Failure::none, {}, {}, {}}; }
};

/// True iff Y ∪ {[0]} is a submonoid of P^{s-1} ∪ {[0]}: [1] ∈ Y and the
/// product of any two members lands back in Y or collapses to Zero.
inline MonoidVerdict is_extended_submonoid(const PointSet& Y) {
    const FieldContext& F = Y.field();
    Coords identity(static_cast<std::size_t>(Y.dimension()), F.one());
    if (!Y.contains(identity))
        return {false, MonoidVerdict::Failure::missing_identity, {}, {}, {}};
    for (const Coords& a : Y.elements()) {
        for (const Coords& b : Y.elements()) {
            ExtendedPoint prod = proj_product(F, ExtendedPoint(ProjectivePoint::from_canonical(a)),
                                              ExtendedPoint(ProjectivePoint::from_canonical(b)));
            if (prod.is_zero()) continue;
            if (!Y.contains(prod.point().coords()))
                return {false, MonoidVerdict::Failure::not_closed, a, b, {}};
        }
    }
    return MonoidVerdict::pass();
}

/// True iff Y is a finite subgroup of the projective torus: all coordinates
/// are units, [1] ∈ Y and Y is product-closed (finiteness plus cancellation
/// in the torus then force inverses).
inline MonoidVerdict is_torus_subgroup(const PointSet& Y) {
    if (Y.empty()) return {false, MonoidVerdict::Failure::empty, {}, {}, {}};
    for (const Coords& a : Y.elements())
        for (const FieldElement& c : a)
            if (c.value == 0)
                return {false, MonoidVerdict::Failure::zero_coordinate, {}, {}, a};
    MonoidVerdict monoid = is_extended_submonoid(Y);
    if (!monoid.ok) return monoid;
    return MonoidVerdict::pass();
}

/// True iff Y is a submonoid of A^s: contains (1,...,1) and is closed
/// under the componentwise product (the zero vector is just a point here).
inline MonoidVerdict is_affine_submonoid(const PointSet& Y) {
    const FieldContext& F = Y.field();
    Coords identity(static_cast<std::size_t>(Y.dimension()), F.one());
    if (!Y.contains(identity))
        return {false, MonoidVerdict::Failure::missing_identity, {}, {}, {}};
    for (const Coords& a : Y.elements()) {
        for (const Coords& b : Y.elements()) {
            AffinePoint prod = affine_product(F, AffinePoint(a), AffinePoint(b));
            if (!Y.contains(prod.coords()))
                return {false, MonoidVerdict::Failure::not_closed, a, b, {}};
        }
    }
    return MonoidVerdict::pass();
}

constexpr std::size_t default_enumeration_bound = 1'000'000;

struct ClosureResult {
    PointSet set;        // the projective points of the closure
    bool zero = false;   // whether the absorbing class [0] was produced
};

/// Smallest subset of P^{s-1} ∪ {[0]} containing the generators and [1]
/// that is closed under proj_product. Breadth-first over the product table.
inline ClosureResult monoid_closure(const PointSet& generators,
                                    std::size_t bound = default_enumeration_bound) {
    if (!generators.projective())
        fail("DimensionMismatch", "monoid_closure expects a projective set");
    const FieldContext& F = generators.field();
    int s = generators.dimension();
    ClosureResult result{PointSet(F, s, Ambient::projective), false};
    result.set.insert(ProjectivePoint::identity(F, s));
    std::vector<Coords> frontier;
    for (const Coords& c : generators.elements())
        if (result.set.insert(ProjectivePoint::normalize(F, c))) frontier.push_back(c);
    while (!frontier.empty()) {
        std::vector<Coords> next;
        for (const Coords& a : frontier) {
            // products with everything currently in the closure
            std::vector<Coords> snapshot = result.set.elements();
            for (const Coords& b : snapshot) {
                ExtendedPoint prod =
                    proj_product(F, ExtendedPoint(ProjectivePoint::from_canonical(a)),
                                 ExtendedPoint(ProjectivePoint::from_canonical(b)));
                if (prod.is_zero()) {
                    result.zero = true;
                    continue;
                }
                if (result.set.insert(prod.point())) {
                    next.push_back(prod.point().coords());
                    if (result.set.size() > bound)
                        fail("ClosureTooLarge", "monoid closure exceeded " + std::to_string(bound) +
                                                    " elements");
                }
            }
        }
        frontier = std::move(next);
    }
    return result;
}

/// Affine counterpart of monoid_closure (identity (1,...,1) adjoined).
inline PointSet affine_monoid_closure(const PointSet& generators,
                                      std::size_t bound = default_enumeration_bound) {
    if (generators.projective())
        fail("DimensionMismatch", "affine_monoid_closure expects an affine set");
    const FieldContext& F = generators.field();
    int s = generators.dimension();
    PointSet closure(F, s, Ambient::affine);
    closure.insert(AffinePoint(Coords(static_cast<std::size_t>(s), F.one())));
    std::vector<Coords> frontier;
    for (const Coords& c : generators.elements())
        if (closure.insert(AffinePoint(c))) frontier.push_back(c);
    while (!frontier.empty()) {
        std::vector<Coords> next;
        for (const Coords& a : frontier) {
            std::vector<Coords> snapshot = closure.elements();
            for (const Coords& b : snapshot) {
                AffinePoint prod = affine_product(F, AffinePoint(a), AffinePoint(b));
                if (closure.insert(prod)) {
                    next.push_back(prod.coords());
                    if (closure.size() > bound)
                        fail("ClosureTooLarge", "monoid closure exceeded " + std::to_string(bound) +
                                                    " elements");
                }
            }
        }
        frontier = std::move(next);
    }
    return closure;
}

/// {τ·y : y ∈ Y} for an affine set Y and τ ∈ GF(p)*.
inline PointSet scale_set(FieldElement tau, const PointSet& Y) {
    if (Y.projective()) fail("DimensionMismatch", "scale_set expects an affine set");
    if (tau.value == 0) fail("ZeroScalar", "scaling by 0 collapses the set");
    const FieldContext& F = Y.field();
    PointSet out(F, Y.dimension(), Ambient::affine);
    for (const Coords& c : Y.elements()) {
        Coords scaled(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) scaled[i] = F.mul(tau, c[i]);
        out.insert(AffinePoint(std::move(scaled)));
    }
    return out;
}

}  // namespace binomideal
