#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "dirichlet/bundle.hpp"

namespace dirichlet {

enum class SeriesKind { dirichlet, polynomial };

std::string_view to_string(SeriesKind kind);
std::optional<SeriesKind> parse_series_kind(std::string_view name);

/// Σ_n |B_n| n^X (dirichlet) or Σ_n |B_n| X^n (polynomial), where B_n is the
/// set of base points whose fiber has n elements.
struct CardinalitySeries {
    SeriesKind kind = SeriesKind::dirichlet;
    /// n ↦ |B_n|, only positive counts.
    std::map<std::size_t, Natural> coefficients;

    friend bool operator==(const CardinalitySeries&, const CardinalitySeries&) = default;
};

CardinalitySeries series_of(const Bundle& pi, SeriesKind kind);
/// Exact value at |X| = x, with 0^0 = 1.
Natural eval_series(const CardinalitySeries& s, std::size_t x);

/// "2^X + 2·3^X": terms joined by " + ", coefficient 1 omitted, "·" between
/// coefficient and power; dirichlet terms by n ascending, polynomial terms by
/// n descending. The empty series renders as "0".
std::string render(const CardinalitySeries& s);

} // namespace dirichlet
