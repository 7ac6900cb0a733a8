#pragma once

#include <vector>

#include "dirichlet/bundle.hpp"

namespace dirichlet {

/// Σ_{f:B→B′} Π_b |E′_{f(b)}|^{|E_b|}.
Natural count_covariant_maps(const Bundle& src, const Bundle& dst);
/// Σ_{f:B→B′} Π_b |E_b|^{|E′_{f(b)}|}.
Natural count_contravariant_maps(const Bundle& src, const Bundle& dst);

/// Every commuting square src → dst. Ordered by base map code, then by the
/// fiber tables (fiber 0 most significant), i.e. by the total map table.
std::vector<BundleMap> enumerate_covariant_maps(const Bundle& src, const Bundle& dst);
/// Every (f, f♯) pair, ordered by base map code, then backward tables.
std::vector<ContraBundleMap> enumerate_contravariant_maps(const Bundle& src, const Bundle& dst);
/// The covariant maps that are pullback squares, in the same order as they
/// appear in enumerate_covariant_maps.
std::vector<BundleMap> enumerate_cartesian_maps(const Bundle& src, const Bundle& dst);

} // namespace dirichlet
