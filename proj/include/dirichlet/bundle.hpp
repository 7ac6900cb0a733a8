#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dirichlet/finset.hpp"

namespace dirichlet {

/// A bundle π : E → B, stored by its fiber sizes. The total set is flattened
/// fiber by fiber: element (b, i) of E_b sits at offset(b) + i.
class Bundle {
public:
    Bundle() = default;
    explicit Bundle(std::vector<std::size_t> fiber_sizes);

    struct Ingestion;
    /// Normalizes an arbitrary projection E → B: total elements are stably
    /// sorted by their image. The report keeps the original labelling.
    static Ingestion from_projection(const FinFunction& projection);

    const std::vector<std::size_t>& fiber_sizes() const { return fibers_; }
    FinSet base() const { return FinSet(fibers_.size()); }
    FinSet total() const { return FinSet(offsets_.back()); }
    std::size_t fiber_size(std::size_t b) const { return fibers_[b]; }
    std::size_t offset(std::size_t b) const { return offsets_[b]; }

    /// π(e).
    std::size_t project(std::size_t e) const { return owner_[e]; }
    FinFunction projection() const { return {total(), base(), owner_}; }

    std::size_t encode(std::size_t b, std::size_t i) const { return offsets_[b] + i; }
    /// (b, i) with e = offset(b) + i.
    std::pair<std::size_t, std::size_t> decode(std::size_t e) const {
        return {owner_[e], e - offsets_[owner_[e]]};
    }

    friend bool operator==(const Bundle& a, const Bundle& b) { return a.fibers_ == b.fibers_; }

private:
    std::vector<std::size_t> fibers_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::size_t> owner_;
};

struct Bundle::Ingestion {
    Bundle bundle;
    /// Old total element ↦ its index in the normalized bundle.
    FinFunction relabel;
};

struct Fiber {
    FinSet set;
    std::size_t offset = 0;
    FinFunction embedding;
};

/// All bundles with |B| ≤ max_base and every fiber ≤ max_fiber, ordered by
/// |B| then lexicographically by fiber sizes.
std::vector<Bundle> enumerate_bundles(std::size_t max_base, std::size_t max_fiber);

/// E_b together with its embedding into E. Throws IndexOutOfRange.
Fiber fiber(const Bundle& pi, std::size_t b);

/// A commuting square from `src` to `dst` (covariant bundle map).
class BundleMap {
public:
    /// Throws Validation when shapes disagree, NotCommuting when
    /// π′ ∘ total_map ≠ base_map ∘ π.
    BundleMap(Bundle src, Bundle dst, FinFunction base_map, FinFunction total_map);

    const Bundle& src() const { return src_; }
    const Bundle& dst() const { return dst_; }
    const FinFunction& base_map() const { return base_; }
    const FinFunction& total_map() const { return total_; }

    /// Local table E_b → E′_{f(b)}.
    std::vector<std::size_t> fiber_table(std::size_t b) const;

    friend bool operator==(const BundleMap&, const BundleMap&) = default;

private:
    Bundle src_;
    Bundle dst_;
    FinFunction base_;
    FinFunction total_;
};

BundleMap identity_map(const Bundle& pi);
/// Builds a map from a base map and local fiber tables E_b → E′_{f(b)}.
BundleMap bundle_map_from_fibers(const Bundle& src, const Bundle& dst, const FinFunction& base_map,
                                 const std::vector<std::vector<std::size_t>>& fiber_tables);
/// g ∘ f. Throws ShapeMismatch unless f.dst == g.src.
BundleMap compose_maps(const BundleMap& g, const BundleMap& f);

/// A contravariant bundle map: base map f : B → B′ and, for every b, a
/// backwards fiber map E′_{f(b)} → E_b.
class ContraBundleMap {
public:
    ContraBundleMap(Bundle src, Bundle dst, FinFunction base_map, std::vector<FinFunction> fiber_back);

    const Bundle& src() const { return src_; }
    const Bundle& dst() const { return dst_; }
    const FinFunction& base_map() const { return base_; }
    const std::vector<FinFunction>& fiber_back() const { return back_; }

    friend bool operator==(const ContraBundleMap&, const ContraBundleMap&) = default;

private:
    Bundle src_;
    Bundle dst_;
    FinFunction base_;
    std::vector<FinFunction> back_;
};

ContraBundleMap identity_contra(const Bundle& pi);
/// (g, g♯) ∘ (f, f♯) = (g∘f, b ↦ f♯_b ∘ g♯_{f(b)}).
ContraBundleMap compose_contra(const ContraBundleMap& g, const ContraBundleMap& f);

/// True iff every fiber map E_b → E′_{f(b)} is a bijection. The fiberwise test
/// is cross-checked against the mediating map into the pullback of π′ along f.
bool is_cartesian(const BundleMap& m);
/// Inverts each backward fiber bijection. Throws NotFiberwiseBijective.
BundleMap contra_to_cartesian_covariant(const ContraBundleMap& m);
/// Throws NotCartesian unless is_cartesian(m).
ContraBundleMap cartesian_covariant_to_contra(const BundleMap& m);

// ---------------------------------------------------------------------------
// Slices and dependent sums/products.

/// An object of Set/B.
struct SliceObject {
    FinSet over;
    Bundle bundle;

    SliceObject() = default;
    /// Throws BaseMismatch unless bundle.base() == over.
    SliceObject(FinSet over, Bundle bundle);
    explicit SliceObject(Bundle bundle) : over(bundle.base()), bundle(std::move(bundle)) {}

    friend bool operator==(const SliceObject&, const SliceObject&) = default;
};

/// Σ: the total set.
FinSet sigma(const Bundle& pi);
/// Π_π q: fiber over b is the set of sections of q over E_b (mixed radix in
/// increasing E order).
SliceObject pi_along(const Bundle& pi, const SliceObject& q);
/// Δ_f q: fiber over x is the q-fiber over f(x).
SliceObject delta(const FinFunction& f, const SliceObject& q);
/// Δ_f q together with its cartesian projection onto q.
BundleMap delta_projection(const FinFunction& f, const Bundle& q);
/// Fiberwise Hom: over b, all functions q_b → r_b (mixed radix).
SliceObject fiberwise_hom(const SliceObject& q, const SliceObject& r);

// ---------------------------------------------------------------------------
// The adjoint functors between Set and bundles.

inline FinSet dom(const Bundle& pi) { return pi.total(); }
inline FinSet cod(const Bundle& pi) { return pi.base(); }
/// id_X : X → X.
Bundle constant_bundle(FinSet x);
/// 0 → X.
Bundle bang_up(FinSet x);
/// X → 1.
Bundle bang_down(FinSet x);

struct ZeroLocus {
    FinSet subset;
    FinFunction inclusion;
};

/// ZC(π): the base points with empty fiber, with their inclusion into B.
ZeroLocus zc(const Bundle& pi);

BundleMap constant_map(const FinFunction& g);
BundleMap bang_up_map(const FinFunction& g);
BundleMap bang_down_map(const FinFunction& g);

// ---------------------------------------------------------------------------
// Vertical / cartesian factorization.

struct Factorization {
    BundleMap vertical;
    BundleMap cartesian;
};

/// m = cartesian ∘ vertical, where cartesian is the pullback of the target
/// along m's base map and vertical is the mediating map over the identity.
Factorization factor_vertical_cartesian(const BundleMap& m);

} // namespace dirichlet
