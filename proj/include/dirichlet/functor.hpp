#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dirichlet/bundle.hpp"

namespace dirichlet {

/// An element (b, h) of D(X) = Σ_b E_b^X, h : X → E_b in local fiber indices.
struct DirichletElement {
    std::size_t base = 0;
    std::vector<std::size_t> fiber_datum;
    friend bool operator==(const DirichletElement&, const DirichletElement&) = default;
};

/// An element (b, t) of P(X) = Σ_b X^{E_b}, t : E_b → X.
struct PolyElement {
    std::size_t base = 0;
    std::vector<std::size_t> fiber_datum;
    friend bool operator==(const PolyElement&, const PolyElement&) = default;
};

/// Σ_b radix_b^{length_b}, elements (b, digits) numbered lexicographically with
/// digits read mixed radix (position 0 most significant).
class SumOfPowers {
public:
    SumOfPowers(std::vector<std::size_t> radices, std::vector<std::size_t> lengths);

    FinSet set() const { return FinSet(offsets_.back()); }
    std::size_t block_offset(std::size_t b) const { return offsets_[b]; }
    std::size_t encode(std::size_t b, std::span<const std::size_t> digits) const;
    std::pair<std::size_t, std::vector<std::size_t>> decode(std::size_t code) const;

private:
    std::vector<std::size_t> radices_;
    std::vector<std::size_t> lengths_;
    std::vector<std::size_t> offsets_;
};

/// D(X) materialized, with the canonical code ↔ element bijection.
class DirichletSet {
public:
    DirichletSet(Bundle pi, FinSet x);

    const Bundle& bundle() const { return pi_; }
    FinSet arg() const { return x_; }
    FinSet set() const { return codec_.set(); }
    std::size_t encode(const DirichletElement& el) const;
    DirichletElement decode(std::size_t code) const;

private:
    Bundle pi_;
    FinSet x_;
    SumOfPowers codec_;
};

/// P(X) materialized.
class PolySet {
public:
    PolySet(Bundle pi, FinSet x);

    const Bundle& bundle() const { return pi_; }
    FinSet arg() const { return x_; }
    FinSet set() const { return codec_.set(); }
    std::size_t encode(const PolyElement& el) const;
    PolyElement decode(std::size_t code) const;

private:
    Bundle pi_;
    FinSet x_;
    SumOfPowers codec_;
};

/// |D(X)| = Σ_b |E_b|^|X|, exact (0^0 = 1).
Natural dir_size(const Bundle& pi, FinSet x);
/// |P(X)| = Σ_b |X|^|E_b|, exact.
Natural poly_size(const Bundle& pi, FinSet x);

DirichletSet dir_eval(const Bundle& pi, FinSet x);
/// D(g) : D(X′) → D(X) for g : X → X′, (b, h) ↦ (b, h ∘ g).
FinFunction dir_eval_map(const Bundle& pi, const FinFunction& g);

PolySet poly_eval(const Bundle& pi, FinSet x);
/// P(g) : P(X) → P(X′), (b, t) ↦ (b, g ∘ t).
FinFunction poly_eval_map(const Bundle& pi, const FinFunction& g);
/// |Σ_{!B} Π_π Δ_{!E} X|, computed through the slice operations.
Natural poly_size_via_composite(const Bundle& pi, FinSet x);

// ---------------------------------------------------------------------------
// Presentations of the Dirichlet extent.

enum class Presentation { sum, hom, limit, pullback, slice };

inline constexpr Presentation all_presentations[] = {Presentation::sum, Presentation::hom, Presentation::limit,
                                                     Presentation::pullback, Presentation::slice};

std::string_view to_string(Presentation p);
std::optional<Presentation> parse_presentation(std::string_view name);

/// A set computed by one presentation, with its bijection onto dir_eval.
struct PresentedSet {
    Presentation method = Presentation::sum;
    FinSet carrier;
    FinFunction to_sum;
};

/// hom:      Hom(!_X, π) as commuting squares.
/// limit:    the limit of the left-cone quiver (B at vertex 0, E at 1..|X|).
/// pullback: {(s, b) ∈ E^X × B : π ∘ s = const_b}.
/// slice:    Σ_B Hom_{/B}(Δ_{!B} X, π).
PresentedSet dir_eval_via(Presentation method, const Bundle& pi, FinSet x);
/// The presentation's own contravariant action carrier(X′) → carrier(X) for
/// g : X → X′, computed natively (precomposition, cone restriction, ...).
FinFunction dir_eval_via_map(Presentation method, const Bundle& pi, const FinFunction& g);

/// The left-cone quiver whose limit is D(X).
QuiverDiagram left_cone_diagram(const Bundle& pi, FinSet x);

// ---------------------------------------------------------------------------
// Natural transformations.

/// A transformation of Dirichlet functors, carried by its bundle map at !₀.
class NatTransform {
public:
    explicit NatTransform(BundleMap carrier) : carrier_(std::move(carrier)) {}

    const Bundle& src() const { return carrier_.src(); }
    const Bundle& dst() const { return carrier_.dst(); }
    const BundleMap& carrier() const { return carrier_; }

private:
    BundleMap carrier_;
};

/// t_X : D(X) → D′(X), (b, h) ↦ (f(b), f♯ ∘ h).
FinFunction nat_component(const NatTransform& t, FinSet x);

/// A table of components D(X) → D′(X) for X = 0..probe_max.
struct NaturalFamily {
    Bundle src;
    Bundle dst;
    std::size_t probe_max = 0;
    std::vector<FinFunction> components;

    friend bool operator==(const NaturalFamily&, const NaturalFamily&) = default;
};

/// All functions between canonical sets of size ≤ probe_max, ordered by
/// domain size, codomain size, then code.
std::vector<FinFunction> probe_morphisms(std::size_t probe_max);

struct SquareFailure {
    FinFunction g;
    std::size_t element = 0;
    std::string describe() const;
};

struct NaturalityReport {
    std::size_t squares_checked = 0;
    std::optional<SquareFailure> failure;
    bool ok() const { return !failure.has_value(); }
};

/// Checks D′(g) ∘ t_{X′} = t_X ∘ D(g) for every probe morphism g : X → X′.
NaturalityReport check_naturality(const NaturalFamily& family);
NaturalityReport check_naturality(const NatTransform& t, std::size_t probe_max);

struct CartesianReport {
    bool by_bundle = false;
    bool by_probe = false;
    /// The first naturality square that is not a pullback.
    std::optional<FinFunction> failing_square;
};

/// Whether the naturality square at g is a pullback (mediating map bijective).
bool naturality_square_is_pullback(const NaturalFamily& family, const FinFunction& g);
bool is_cartesian_family(const NaturalFamily& family);
CartesianReport is_cartesian_nat(const NatTransform& t, std::size_t probe_max);

struct ConnectedLimitReport {
    std::size_t pushouts_checked = 0;
    std::size_t coequalizers_checked = 0;
    std::optional<std::string> failure;
    bool ok() const { return !failure.has_value(); }
};

/// For every span X ← Z → Y and parallel pair Z ⇉ X among sets ≤ probe_max,
/// checks that D sends the pushout / coequalizer to a pullback / equalizer: the
/// comparison map built from the colimit legs must be a bijection.
ConnectedLimitReport check_preserves_connected_limits(const Bundle& pi, std::size_t probe_max);

/// The bundle whose Dirichlet functor is P ∘ D. Base: pairs (b, g : E_{P,b} → B_D)
/// ordered by b then code of g; fiber over (b, g): Π_e |E_{D, g(e)}|.
Bundle compose_poly_after_dirichlet(const Bundle& p, const Bundle& d);
/// The isomorphism ext(P∘D)(X) → P(D(X)) for the composite bundle.
FinFunction compose_pd_iso(const Bundle& p, const Bundle& d, FinSet x);

/// Component of the polynomial transformation induced by a contravariant map:
/// (b, t) ↦ (f(b), t ∘ f♯_b).
FinFunction poly_nat_component(const ContraBundleMap& m, FinSet x);

} // namespace dirichlet
