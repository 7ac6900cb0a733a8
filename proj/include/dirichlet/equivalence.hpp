#pragma once

#include <cstddef>
#include <vector>

#include "dirichlet/functor.hpp"
#include "dirichlet/hom.hpp"

namespace dirichlet {

/// A set-valued functor restricted to the probe category (sets 0..N and the
/// functions between them). arrows[k] is the image of the k-th probe morphism.
struct ProbeDiagram {
    struct Arrow {
        std::size_t from = 0;
        std::size_t to = 0;
        FinFunction action;
    };

    std::vector<std::size_t> sizes;
    std::vector<Arrow> arrows;
};

ProbeDiagram dirichlet_probe(const Bundle& pi, std::size_t probe_max);
ProbeDiagram polynomial_probe(const Bundle& pi, std::size_t probe_max);

/// Every family of component tables F(X) → G(X) natural over all arrows,
/// found by exhaustive backtracking that checks each naturality equation as
/// soon as both of its sides are assigned. Families come out in lexicographic
/// order of their concatenated component tables.
std::vector<std::vector<FinFunction>> solve_natural_families(const ProbeDiagram& from, const ProbeDiagram& to);

std::vector<NaturalFamily> enumerate_natural_families(const Bundle& src, const Bundle& dst, std::size_t probe_max);
/// Diagnostic: how many component tables exist when naturality is dropped,
/// Π_X |D′(X)|^|D(X)|.
Natural count_families_without_naturality(const Bundle& src, const Bundle& dst, std::size_t probe_max);

/// Reads the carrier off the components at sizes 1 and 0 via D(1) ≅ E, D(0) ≅ B.
BundleMap restrict_at_bang0(const NaturalFamily& family);
NaturalFamily extend_from_bang0(const BundleMap& m, std::size_t probe_max);

/// Natural families between the polynomial functors of two bundles.
std::vector<std::vector<FinFunction>> enumerate_poly_natural_families(const Bundle& src, const Bundle& dst,
                                                                      std::size_t probe_max);

/// Contravariant maps whose backward fiber maps are all bijections.
std::vector<ContraBundleMap> enumerate_cartesian_contra_maps(const Bundle& src, const Bundle& dst);

struct CartesianEquivalence {
    /// Cartesian covariant maps (the Dirichlet side), canonical order.
    std::vector<BundleMap> dir_side;
    /// Fiberwise-bijective contravariant maps (the polynomial side), canonical order.
    std::vector<ContraBundleMap> poly_side;
    /// dir_side[i] translates to poly_side[pairing[i]].
    std::vector<std::size_t> pairing;
};

/// Pairs the two sides by fiberwise inversion. Throws std::logic_error when the
/// translation fails to be a bijection.
CartesianEquivalence poly_dir_cartesian_equiv(const Bundle& src, const Bundle& dst);

} // namespace dirichlet
