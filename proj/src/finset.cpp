#include "dirichlet/finset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dirichlet/error.hpp"

namespace dirichlet {

FinFunction::FinFunction(FinSet dom, FinSet cod, std::vector<std::size_t> table)
    : dom_(dom), cod_(cod), table_(std::move(table)) {
    validate();
}

FinFunction::FinFunction(std::vector<std::size_t> table, FinSet cod)
    : dom_(table.size()), cod_(cod), table_(std::move(table)) {
    validate();
}

void FinFunction::validate() const {
    if (table_.size() != dom_.size) {
        fail(ErrorKind::validation, "function table has length " + std::to_string(table_.size()) +
                                        " but domain has size " + std::to_string(dom_.size));
    }
    for (std::size_t i = 0; i < table_.size(); ++i) {
        if (table_[i] >= cod_.size) {
            fail(ErrorKind::validation, "table entry " + std::to_string(i) + " = " +
                                            std::to_string(table_[i]) + " is not below codomain size " +
                                            std::to_string(cod_.size));
        }
    }
}

FinFunction identity(FinSet a) {
    std::vector<std::size_t> t(a.size);
    std::iota(t.begin(), t.end(), std::size_t{0});
    return {a, a, std::move(t)};
}

FinFunction compose(const FinFunction& g, const FinFunction& f) {
    if (f.cod() != g.dom()) {
        fail(ErrorKind::codomain_mismatch, "cannot compose: codomain " + std::to_string(f.cod().size) +
                                               " != domain " + std::to_string(g.dom().size));
    }
    std::vector<std::size_t> t(f.dom().size);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
    return {f.dom(), g.cod(), std::move(t)};
}

FinFunction constant(FinSet dom, FinSet cod, std::size_t value) {
    return {dom, cod, std::vector<std::size_t>(dom.size, value)};
}

FinFunction to_terminal(FinSet x) { return constant(x, FinSet(1), 0); }

FinFunction from_initial(FinSet x) { return {FinSet(0), x, {}}; }

bool is_injective(const FinFunction& f) {
    std::vector<bool> seen(f.cod().size, false);
    for (auto y : f.table()) {
        if (seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

bool is_surjective(const FinFunction& f) {
    std::vector<bool> seen(f.cod().size, false);
    for (auto y : f.table()) seen[y] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_bijective(const FinFunction& f) { return f.dom() == f.cod() && is_injective(f); }

FinFunction inverse(const FinFunction& f) {
    if (!is_bijective(f)) fail(ErrorKind::invalid_argument, "inverse of a non-bijective function");
    std::vector<std::size_t> t(f.dom().size);
    for (std::size_t i = 0; i < t.size(); ++i) t[f(i)] = i;
    return {f.cod(), f.dom(), std::move(t)};
}

Natural count_functions(FinSet exp, FinSet base) { return power(Natural(base.size), exp.size); }

FinSet exponential(FinSet base, FinSet exp) {
    return FinSet(to_materialized_size(count_functions(exp, base), "exponential"));
}

std::size_t encode_function(std::span<const std::size_t> table, std::size_t radix) {
    std::size_t code = 0;
    for (auto digit : table) code = code * radix + digit;
    return code;
}

std::vector<std::size_t> decode_function(std::size_t code, std::size_t length, std::size_t radix) {
    std::vector<std::size_t> t(length, 0);
    for (std::size_t i = length; i-- > 0;) {
        t[i] = code % radix;
        code /= radix;
    }
    return t;
}

void for_each_table(std::size_t dom, std::size_t cod,
                    const std::function<void(std::span<const std::size_t>)>& visit) {
    const std::size_t total = checked_power(cod, dom, "function enumeration");
    std::vector<std::size_t> t(dom, 0);
    for (std::size_t n = 0; n < total; ++n) {
        visit(t);
        for (std::size_t i = dom; i-- > 0;) {
            if (++t[i] < cod) break;
            t[i] = 0;
        }
    }
}

std::vector<FinFunction> all_functions(FinSet dom, FinSet cod) {
    std::vector<FinFunction> out;
    for_each_table(dom.size, cod.size, [&](std::span<const std::size_t> t) {
        out.emplace_back(dom, cod, std::vector<std::size_t>(t.begin(), t.end()));
    });
    return out;
}

Pullback pullback(const FinFunction& f, const FinFunction& g) {
    if (f.cod() != g.cod()) {
        fail(ErrorKind::codomain_mismatch, "pullback legs have codomains " +
                                               std::to_string(f.cod().size) + " and " +
                                               std::to_string(g.cod().size));
    }
    // Bucket g by image so pairs come out in (a, b) order without a full scan.
    std::vector<std::vector<std::size_t>> fibers_of_g(g.cod().size);
    for (std::size_t b = 0; b < g.dom().size; ++b) fibers_of_g[g(b)].push_back(b);

    Natural count = 0;
    for (std::size_t a = 0; a < f.dom().size; ++a) count += fibers_of_g[f(a)].size();
    const std::size_t n = to_materialized_size(count, "pullback");

    std::vector<std::size_t> left, right;
    left.reserve(n);
    right.reserve(n);
    for (std::size_t a = 0; a < f.dom().size; ++a) {
        for (auto b : fibers_of_g[f(a)]) {
            left.push_back(a);
            right.push_back(b);
        }
    }
    FinSet apex(n);
    return {apex, FinFunction(apex, f.dom(), std::move(left)), FinFunction(apex, g.dom(), std::move(right))};
}

std::size_t pullback_index(const Pullback& pb, std::size_t a, std::size_t b) {
    auto p1 = pb.p1.table();
    auto p2 = pb.p2.table();
    auto lo = std::lower_bound(p1.begin(), p1.end(), a) - p1.begin();
    auto hi = std::upper_bound(p1.begin(), p1.end(), a) - p1.begin();
    auto it = std::lower_bound(p2.begin() + lo, p2.begin() + hi, b);
    if (it == p2.begin() + hi || *it != b) return npos;
    return static_cast<std::size_t>(it - p2.begin());
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

    /// Class index of each element, numbered by first appearance.
    std::pair<std::size_t, std::vector<std::size_t>> classes() {
        std::vector<std::size_t> label(parent_.size(), npos);
        std::vector<std::size_t> out(parent_.size());
        std::size_t next = 0;
        for (std::size_t x = 0; x < parent_.size(); ++x) {
            auto r = find(x);
            if (label[r] == npos) label[r] = next++;
            out[x] = label[r];
        }
        return {next, out};
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

Pushout pushout(const FinFunction& f, const FinFunction& g) {
    if (f.dom() != g.dom()) {
        fail(ErrorKind::domain_mismatch, "pushout legs have domains " + std::to_string(f.dom().size) +
                                             " and " + std::to_string(g.dom().size));
    }
    const std::size_t nf = f.cod().size;
    UnionFind uf(nf + g.cod().size);
    for (std::size_t c = 0; c < f.dom().size; ++c) uf.unite(f(c), nf + g(c));
    auto [count, label] = uf.classes();
    FinSet apex(count);
    std::vector<std::size_t> t1(label.begin(), label.begin() + static_cast<std::ptrdiff_t>(nf));
    std::vector<std::size_t> t2(label.begin() + static_cast<std::ptrdiff_t>(nf), label.end());
    return {apex, FinFunction(f.cod(), apex, std::move(t1)), FinFunction(g.cod(), apex, std::move(t2))};
}

Coequalizer coequalizer(const FinFunction& f, const FinFunction& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod()) {
        fail(ErrorKind::shape_mismatch, "coequalizer of non-parallel functions");
    }
    UnionFind uf(f.cod().size);
    for (std::size_t x = 0; x < f.dom().size; ++x) uf.unite(f(x), g(x));
    auto [count, label] = uf.classes();
    FinSet apex(count);
    return {apex, FinFunction(f.cod(), apex, std::move(label))};
}

Equalizer equalizer(const FinFunction& f, const FinFunction& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod()) {
        fail(ErrorKind::shape_mismatch, "equalizer of non-parallel functions");
    }
    std::vector<std::size_t> t;
    for (std::size_t x = 0; x < f.dom().size; ++x) {
        if (f(x) == g(x)) t.push_back(x);
    }
    FinSet apex(t.size());
    return {apex, FinFunction(apex, f.dom(), std::move(t))};
}

void QuiverDiagram::validate() const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.src >= objects.size() || e.dst >= objects.size()) {
            fail(ErrorKind::shape_mismatch, "edge " + std::to_string(i) + " has an endpoint out of range");
        }
        if (e.map.dom() != objects[e.src] || e.map.cod() != objects[e.dst]) {
            fail(ErrorKind::shape_mismatch, "edge " + std::to_string(i) + " map does not match its endpoints");
        }
    }
}

std::size_t QuiverLimit::index_of(std::span<const std::size_t> tuple) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), tuple, [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    if (it == tuples.end() || !std::equal(it->begin(), it->end(), tuple.begin(), tuple.end())) return npos;
    return static_cast<std::size_t>(it - tuples.begin());
}

QuiverLimit limit_of_quiver(const QuiverDiagram& d) {
    d.validate();
    Natural ambient = 1;
    for (auto o : d.objects) ambient *= o.size;
    to_materialized_size(ambient, "limit ambient product");

    const std::size_t k = d.objects.size();
    // Edges become checkable once both endpoints are assigned.
    std::vector<std::vector<const QuiverEdge*>> ready_at(k);
    for (const auto& e : d.edges) ready_at[std::max(e.src, e.dst)].push_back(&e);

    QuiverLimit out;
    std::vector<std::size_t> tuple(k, 0);
    auto consistent = [&](std::size_t level) {
        for (const auto* e : ready_at[level]) {
            if (e->map(tuple[e->src]) != tuple[e->dst]) return false;
        }
        return true;
    };
    std::function<void(std::size_t)> extend = [&](std::size_t level) {
        if (level == k) {
            out.tuples.push_back(tuple);
            return;
        }
        for (std::size_t x = 0; x < d.objects[level].size; ++x) {
            tuple[level] = x;
            if (consistent(level)) extend(level + 1);
        }
    };
    extend(0);

    out.apex = FinSet(out.tuples.size());
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::size_t> t(out.tuples.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = out.tuples[i][j];
        out.projections.emplace_back(out.apex, d.objects[j], std::move(t));
    }
    return out;
}

} // namespace dirichlet
