#include "dirichlet/series.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace dirichlet {

std::string_view to_string(SeriesKind kind) {
    return kind == SeriesKind::dirichlet ? "dirichlet" : "polynomial";
}

std::optional<SeriesKind> parse_series_kind(std::string_view name) {
    if (name == "dirichlet") return SeriesKind::dirichlet;
    if (name == "polynomial") return SeriesKind::polynomial;
    return std::nullopt;
}

CardinalitySeries series_of(const Bundle& pi, SeriesKind kind) {
    CardinalitySeries s{kind, {}};
    for (auto n : pi.fiber_sizes()) s.coefficients[n] += 1;
    return s;
}

Natural eval_series(const CardinalitySeries& s, std::size_t x) {
    Natural total = 0;
    for (const auto& [n, count] : s.coefficients) {
        total += count * (s.kind == SeriesKind::dirichlet ? power(Natural(n), x) : power(Natural(x), n));
    }
    return total;
}

std::string render(const CardinalitySeries& s) {
    if (s.coefficients.empty()) return "0";
    std::vector<std::pair<std::size_t, Natural>> terms(s.coefficients.begin(), s.coefficients.end());
    if (s.kind == SeriesKind::polynomial) std::reverse(terms.begin(), terms.end());
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, count] : terms) {
        if (!first) os << " + ";
        first = false;
        if (count != 1) os << count << "·";
        if (s.kind == SeriesKind::dirichlet) {
            os << n << "^X";
        } else {
            os << "X^" << n;
        }
    }
    return os.str();
}

} // namespace dirichlet
