#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's enumeration or encoding code: every count is
// obtained by walking raw integer tuples.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Table = std::vector<std::size_t>;

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Visits every table of length n with entries < k (lexicographic).
inline void tables(std::size_t n, std::size_t k, const std::function<void(const Table&)>& visit) {
    Table t(n, 0);
    if (n > 0 && k == 0) return;
    while (true) {
        visit(t);
        std::size_t i = n;
        while (i > 0) {
            if (++t[i - 1] < k) break;
            t[i - 1] = 0;
            --i;
        }
        if (i == 0) return;
    }
}

inline Table owners(const Table& fibers) {
    Table out;
    for (std::size_t b = 0; b < fibers.size(); ++b) out.insert(out.end(), fibers[b], b);
    return out;
}

inline std::size_t sum(const Table& t) {
    std::size_t s = 0;
    for (auto v : t) s += v;
    return s;
}

/// All pairs (a, b) with f(a) = g(b), by scanning the full product.
inline std::vector<std::pair<std::size_t, std::size_t>> pullback_pairs(const Table& f, const Table& g) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            if (f[a] == g[b]) out.emplace_back(a, b);
    return out;
}

/// Number of classes of the equivalence on n points generated by the pairs,
/// computed as connected components via repeated label relaxation.
inline std::size_t quotient_classes(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    Table label(n);
    for (std::size_t i = 0; i < n; ++i) label[i] = i;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : pairs) {
            auto m = std::min(label[a], label[b]);
            if (label[a] != m || label[b] != m) {
                label[a] = label[b] = m;
                changed = true;
            }
        }
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += label[i] == i;
    return count;
}

/// |D(X)| by enumerating pairs (b, h : X → E_b).
inline std::uint64_t dirichlet_count(const Table& fibers, std::size_t x) {
    std::uint64_t count = 0;
    for (auto k : fibers) tables(x, k, [&](const Table&) { ++count; });
    return count;
}

/// |P(X)| by enumerating pairs (b, t : E_b → X).
inline std::uint64_t poly_count(const Table& fibers, std::size_t x) {
    std::uint64_t count = 0;
    for (auto k : fibers) tables(k, x, [&](const Table&) { ++count; });
    return count;
}

/// Commuting squares src → dst: scan every (base table, total table) pair.
inline std::uint64_t covariant_map_count(const Table& src, const Table& dst) {
    auto ps = owners(src), pd = owners(dst);
    std::uint64_t count = 0;
    tables(src.size(), dst.size(), [&](const Table& f) {
        tables(ps.size(), pd.size(), [&](const Table& t) {
            bool ok = true;
            for (std::size_t e = 0; e < ps.size() && ok; ++e) ok = pd[t[e]] == f[ps[e]];
            count += ok;
        });
    });
    return count;
}

/// Commuting squares that restrict to bijections on every fiber.
inline std::uint64_t cartesian_map_count(const Table& src, const Table& dst) {
    auto ps = owners(src), pd = owners(dst);
    std::uint64_t count = 0;
    tables(src.size(), dst.size(), [&](const Table& f) {
        tables(ps.size(), pd.size(), [&](const Table& t) {
            bool ok = true;
            for (std::size_t e = 0; e < ps.size() && ok; ++e) ok = pd[t[e]] == f[ps[e]];
            if (!ok) return;
            for (std::size_t b = 0; b < src.size() && ok; ++b) {
                if (src[b] != dst[f[b]]) ok = false;
            }
            // Injective on each fiber (sizes already match, so bijective).
            for (std::size_t e1 = 0; e1 < ps.size() && ok; ++e1)
                for (std::size_t e2 = e1 + 1; e2 < ps.size() && ok; ++e2)
                    if (ps[e1] == ps[e2] && t[e1] == t[e2]) ok = false;
            count += ok;
        });
    });
    return count;
}

/// (f, f♯) pairs: base table and, per b, any table E′_{f(b)} → E_b.
inline std::uint64_t contravariant_map_count(const Table& src, const Table& dst) {
    std::uint64_t count = 0;
    tables(src.size(), dst.size(), [&](const Table& f) {
        std::uint64_t prod = 1;
        for (std::size_t b = 0; b < src.size(); ++b) {
            std::uint64_t c = 0;
            tables(dst[f[b]], src[b], [&](const Table&) { ++c; });
            prod *= c;
        }
        count += prod;
    });
    return count;
}

/// Number of tuples of a quiver limit: scan the full product and filter.
struct Edge {
    std::size_t src, dst;
    Table map;
};

inline std::uint64_t limit_count(const Table& objects, const std::vector<Edge>& edges) {
    std::uint64_t count = 0;
    std::function<void(Table&, std::size_t)> rec = [&](Table& tuple, std::size_t level) {
        if (level == objects.size()) {
            for (const auto& e : edges)
                if (e.map[tuple[e.src]] != tuple[e.dst]) return;
            ++count;
            return;
        }
        for (std::size_t v = 0; v < objects[level]; ++v) {
            tuple[level] = v;
            rec(tuple, level + 1);
        }
    };
    Table tuple(objects.size());
    rec(tuple, 0);
    return count;
}

} // namespace oracle
