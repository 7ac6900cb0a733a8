#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "dirichlet/count.hpp"

namespace dirichlet {

/// The canonical finite set {0, ..., size-1}. Sets are skeletal: two sets are
/// equal iff their sizes are.
struct FinSet {
    std::size_t size = 0;

    constexpr FinSet() = default;
    constexpr explicit FinSet(std::size_t n) : size(n) {}

    constexpr bool contains(std::size_t x) const { return x < size; }
    friend constexpr auto operator<=>(FinSet, FinSet) = default;
};

/// A total function between canonical finite sets, given by its image table.
class FinFunction {
public:
    FinFunction() = default;
    /// Validates that every entry is below `cod.size`.
    FinFunction(FinSet dom, FinSet cod, std::vector<std::size_t> table);
    /// Domain size taken from the table length.
    FinFunction(std::vector<std::size_t> table, FinSet cod);

    FinSet dom() const { return dom_; }
    FinSet cod() const { return cod_; }
    std::span<const std::size_t> table() const { return table_; }

    std::size_t operator()(std::size_t x) const { return table_[x]; }

    friend bool operator==(const FinFunction&, const FinFunction&) = default;
    friend auto operator<=>(const FinFunction& a, const FinFunction& b) {
        if (auto c = a.dom_ <=> b.dom_; c != 0) return c;
        if (auto c = a.cod_ <=> b.cod_; c != 0) return c;
        return a.table_ <=> b.table_;
    }

private:
    void validate() const;

    FinSet dom_;
    FinSet cod_;
    std::vector<std::size_t> table_;
};

FinFunction identity(FinSet a);
/// g ∘ f. Throws CodomainMismatch unless f.cod == g.dom.
FinFunction compose(const FinFunction& g, const FinFunction& f);
FinFunction constant(FinSet dom, FinSet cod, std::size_t value);
/// The unique map X → 1.
FinFunction to_terminal(FinSet x);
/// The unique map 0 → X.
FinFunction from_initial(FinSet x);

bool is_injective(const FinFunction& f);
bool is_surjective(const FinFunction& f);
bool is_bijective(const FinFunction& f);
/// Inverse of a bijection; throws InvalidArgument otherwise.
FinFunction inverse(const FinFunction& f);

// ---------------------------------------------------------------------------
// Exponentials and the mixed-radix encoding of functions.
//
// A function t : n → k is encoded as Σ_i t[i]·k^(n-1-i): position 0 is the
// most significant digit, so codes order functions lexicographically.

/// |base|^|exp| with 0^0 = 1, exact.
Natural count_functions(FinSet exp, FinSet base);
/// The set of functions exp → base, indexed by mixed-radix code.
FinSet exponential(FinSet base, FinSet exp);
std::size_t encode_function(std::span<const std::size_t> table, std::size_t radix);
std::vector<std::size_t> decode_function(std::size_t code, std::size_t length, std::size_t radix);
/// Every function dom → cod in code order (cap-checked).
std::vector<FinFunction> all_functions(FinSet dom, FinSet cod);
/// Calls `visit` with every table dom → cod in code order, without materializing
/// the list. Cap-checked on the number of tables.
void for_each_table(std::size_t dom, std::size_t cod,
                    const std::function<void(std::span<const std::size_t>)>& visit);

// ---------------------------------------------------------------------------
// Connected (co)limits.

struct Pullback {
    FinSet apex;
    FinFunction p1;
    FinFunction p2;
};

/// Pairs (a, b) with f(a) = g(b), lexicographically ordered.
Pullback pullback(const FinFunction& f, const FinFunction& g);
/// Index of the pair (a, b) in the apex of `pb`, or npos if absent.
std::size_t pullback_index(const Pullback& pb, std::size_t a, std::size_t b);

struct Pushout {
    FinSet apex;
    FinFunction q1;
    FinFunction q2;
};

/// Quotient of cod f ⊔ cod g by f(c) ~ g(c); classes numbered by first
/// appearance (cod f elements first, then cod g).
Pushout pushout(const FinFunction& f, const FinFunction& g);

struct Coequalizer {
    FinSet apex;
    FinFunction q;
};

Coequalizer coequalizer(const FinFunction& f, const FinFunction& g);

struct Equalizer {
    FinSet apex;
    FinFunction inclusion;
};

/// The subset {x : f(x) = g(x)} in increasing order.
Equalizer equalizer(const FinFunction& f, const FinFunction& g);

// ---------------------------------------------------------------------------
// Limits of quiver-shaped diagrams.

struct QuiverEdge {
    std::size_t src = 0;
    std::size_t dst = 0;
    FinFunction map;
};

struct QuiverDiagram {
    std::vector<FinSet> objects;
    std::vector<QuiverEdge> edges;

    /// Throws ShapeMismatch when an edge's map does not match its endpoints.
    void validate() const;
};

struct QuiverLimit {
    FinSet apex;
    /// tuples[i][k] is the component at object k of the i-th element.
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<FinFunction> projections;

    /// Index of a tuple in `tuples`, or npos.
    std::size_t index_of(std::span<const std::size_t> tuple) const;
};

/// Compatible tuples in lexicographic order. Throws EnumerationCapExceeded
/// when the ambient product of the objects exceeds the cap.
QuiverLimit limit_of_quiver(const QuiverDiagram& d);

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

} // namespace dirichlet
