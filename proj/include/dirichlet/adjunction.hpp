#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dirichlet/bundle.hpp"

namespace dirichlet {

/// The adjunctions between Set and bundles, left adjoint first.
enum class Adjunction {
    bangup_cod,   // Hom↓(!^X, π) ≅ Hom(X, B)
    cod_const,    // Hom(B, Y) ≅ Hom↓(π, id_Y)
    const_dom,    // Hom↓(id_X, π) ≅ Hom(X, E)
    dom_bangdown, // Hom(E, X) ≅ Hom↓(π, !_X)
    zc_bangup,    // Hom(ZC π, X) vs Hom↓(π, !^X); fails on plain bundle maps
    // Diagnostic: Hom_cart(!^X, π) ≅ Hom(X, ZC π), cartesian maps only.
    zc_bangup_cartesian,
};

inline constexpr Adjunction all_adjunctions[] = {Adjunction::bangup_cod, Adjunction::cod_const,
                                                 Adjunction::const_dom, Adjunction::dom_bangdown,
                                                 Adjunction::zc_bangup, Adjunction::zc_bangup_cartesian};

std::string_view to_string(Adjunction a);
std::optional<Adjunction> parse_adjunction(std::string_view name);

struct AdjunctionInstance {
    Bundle bundle;
    std::size_t set_size = 0;
    Natural left_count;
    Natural right_count;
    /// The canonical comparison map was checked to be a bijection.
    bool bijective = false;
    /// The comparison commutes with the Set-side action of every probe function.
    bool natural = false;

    bool holds() const { return left_count == right_count && bijective && natural; }
    std::string describe() const;
};

struct AdjunctionReport {
    Adjunction pair;
    std::size_t max_size = 0;
    std::vector<AdjunctionInstance> instances;
    /// The first instance, in probe order, where the claimed adjunction fails.
    std::optional<AdjunctionInstance> counterexample;

    bool holds() const { return !counterexample.has_value(); }
};

/// Exhaustively compares both hom-sets for all bundles with |B|, fibers ≤ max_size
/// and all sets of size ≤ max_size.
AdjunctionReport check_adjunction(Adjunction pair, std::size_t max_size);
/// Checks a single (bundle, set) instance.
AdjunctionInstance check_adjunction_instance(Adjunction pair, const Bundle& pi, FinSet x, std::size_t probe_max);

} // namespace dirichlet
