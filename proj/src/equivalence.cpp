#include "dirichlet/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

#include "dirichlet/error.hpp"

namespace dirichlet {

ProbeDiagram dirichlet_probe(const Bundle& pi, std::size_t probe_max) {
    ProbeDiagram d;
    for (std::size_t x = 0; x <= probe_max; ++x) d.sizes.push_back(dir_eval(pi, FinSet(x)).set().size);
    for (auto& g : probe_morphisms(probe_max)) d.arrows.push_back({g.cod().size, g.dom().size, dir_eval_map(pi, g)});
    return d;
}

ProbeDiagram polynomial_probe(const Bundle& pi, std::size_t probe_max) {
    ProbeDiagram d;
    for (std::size_t x = 0; x <= probe_max; ++x) d.sizes.push_back(poly_eval(pi, FinSet(x)).set().size);
    for (auto& g : probe_morphisms(probe_max)) d.arrows.push_back({g.dom().size, g.cod().size, poly_eval_map(pi, g)});
    return d;
}

namespace {

struct Constraint {
    std::size_t arrow;
    std::size_t u; // element of F(from), assigned value in G(from)
    std::size_t v; // its image in F(to)
};

class FamilySolver {
public:
    FamilySolver(const ProbeDiagram& from, const ProbeDiagram& to) : from_(from), to_(to) {
        if (from.sizes.size() != to.sizes.size() || from.arrows.size() != to.arrows.size()) {
            fail(ErrorKind::shape_mismatch, "probe diagrams have different shapes");
        }
        offsets_.push_back(0);
        for (std::size_t x = 0; x < from.sizes.size(); ++x) {
            offsets_.push_back(offsets_.back() + from.sizes[x]);
            level_.insert(level_.end(), from.sizes[x], x);
        }
        later_.resize(offsets_.back());
        for (std::size_t k = 0; k < from.arrows.size(); ++k) {
            const auto& fa = from.arrows[k];
            const auto& ta = to.arrows[k];
            if (fa.from != ta.from || fa.to != ta.to) fail(ErrorKind::shape_mismatch, "probe arrows disagree");
            for (std::size_t a = 0; a < from.sizes[fa.from]; ++a) {
                Constraint c{k, offsets_[fa.from] + a, offsets_[fa.to] + fa.action(a)};
                later_[std::max(c.u, c.v)].push_back(c);
            }
        }
        value_.assign(offsets_.back(), 0);
    }

    std::vector<std::vector<FinFunction>> solve() {
        search(0);
        return std::move(found_);
    }

private:
    bool consistent(std::size_t var) const {
        for (const auto& c : later_[var]) {
            const auto& g = to_.arrows[c.arrow].action;
            if (g(value_[c.u]) != value_[c.v]) return false;
        }
        return true;
    }

    void search(std::size_t var) {
        if (var == value_.size()) {
            record();
            return;
        }
        const auto x = level_[var];
        for (std::size_t y = 0; y < to_.sizes[x]; ++y) {
            value_[var] = y;
            if (consistent(var)) search(var + 1);
        }
    }

    void record() {
        check_cap(found_.size() + 1, "natural family enumeration");
        std::vector<FinFunction> family;
        for (std::size_t x = 0; x < from_.sizes.size(); ++x) {
            std::vector<std::size_t> t(from_.sizes[x]);
            for (std::size_t a = 0; a < t.size(); ++a) t[a] = value_[offsets_[x] + a];
            family.emplace_back(FinSet(from_.sizes[x]), FinSet(to_.sizes[x]), std::move(t));
        }
        found_.push_back(std::move(family));
    }

    const ProbeDiagram& from_;
    const ProbeDiagram& to_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> level_;
    std::vector<std::vector<Constraint>> later_;
    // value_[var] is the chosen element of G(level_[var]).
    std::vector<std::size_t> value_;
    std::vector<std::vector<FinFunction>> found_;
};

} // namespace

std::vector<std::vector<FinFunction>> solve_natural_families(const ProbeDiagram& from, const ProbeDiagram& to) {
    return FamilySolver(from, to).solve();
}

std::vector<NaturalFamily> enumerate_natural_families(const Bundle& src, const Bundle& dst, std::size_t probe_max) {
    if (probe_max < 1) fail(ErrorKind::invalid_argument, "probe_max must be at least 1");
    std::vector<NaturalFamily> out;
    for (auto& components : solve_natural_families(dirichlet_probe(src, probe_max), dirichlet_probe(dst, probe_max))) {
        out.push_back({src, dst, probe_max, std::move(components)});
    }
    return out;
}

Natural count_families_without_naturality(const Bundle& src, const Bundle& dst, std::size_t probe_max) {
    Natural total = 1;
    for (std::size_t x = 0; x <= probe_max; ++x) {
        auto from = dir_size(src, FinSet(x));
        total *= power(dir_size(dst, FinSet(x)), from.convert_to<std::size_t>());
    }
    return total;
}

BundleMap restrict_at_bang0(const NaturalFamily& family) {
    if (family.components.size() < 2) fail(ErrorKind::invalid_argument, "restriction needs components at sizes 0 and 1");
    const auto& src = family.src;
    const auto& dst = family.dst;
    auto d0 = dir_eval(src, FinSet(0));
    auto d1 = dir_eval(src, FinSet(1));
    auto dp0 = dir_eval(dst, FinSet(0));
    auto dp1 = dir_eval(dst, FinSet(1));

    std::vector<std::size_t> base(src.base().size);
    for (std::size_t b = 0; b < base.size(); ++b) base[b] = dp0.decode(family.components[0](d0.encode({b, {}}))).base;
    std::vector<std::size_t> total(src.total().size);
    for (std::size_t e = 0; e < total.size(); ++e) {
        auto [b, i] = src.decode(e);
        auto image = dp1.decode(family.components[1](d1.encode({b, {i}})));
        total[e] = dst.encode(image.base, image.fiber_datum[0]);
    }
    return {src, dst, FinFunction(src.base(), dst.base(), std::move(base)),
            FinFunction(src.total(), dst.total(), std::move(total))};
}

NaturalFamily extend_from_bang0(const BundleMap& m, std::size_t probe_max) {
    NaturalFamily family{m.src(), m.dst(), probe_max, {}};
    NatTransform t(m);
    for (std::size_t x = 0; x <= probe_max; ++x) family.components.push_back(nat_component(t, FinSet(x)));
    return family;
}

std::vector<std::vector<FinFunction>> enumerate_poly_natural_families(const Bundle& src, const Bundle& dst,
                                                                      std::size_t probe_max) {
    return solve_natural_families(polynomial_probe(src, probe_max), polynomial_probe(dst, probe_max));
}

std::vector<ContraBundleMap> enumerate_cartesian_contra_maps(const Bundle& src, const Bundle& dst) {
    std::vector<ContraBundleMap> out;
    for (auto& m : enumerate_contravariant_maps(src, dst)) {
        const auto& back = m.fiber_back();
        if (std::all_of(back.begin(), back.end(), [](const FinFunction& f) { return is_bijective(f); })) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

CartesianEquivalence poly_dir_cartesian_equiv(const Bundle& src, const Bundle& dst) {
    CartesianEquivalence eq{enumerate_cartesian_maps(src, dst), enumerate_cartesian_contra_maps(src, dst), {}};
    if (eq.dir_side.size() != eq.poly_side.size()) {
        throw std::logic_error("cartesian hom-sets differ in size");
    }
    std::vector<bool> used(eq.poly_side.size(), false);
    for (const auto& m : eq.dir_side) {
        auto translated = cartesian_covariant_to_contra(m);
        auto it = std::find(eq.poly_side.begin(), eq.poly_side.end(), translated);
        if (it == eq.poly_side.end()) throw std::logic_error("translated map missing from the polynomial side");
        auto k = static_cast<std::size_t>(it - eq.poly_side.begin());
        if (used[k]) throw std::logic_error("translation is not injective");
        used[k] = true;
        if (!(contra_to_cartesian_covariant(*it) == m)) throw std::logic_error("translation does not round-trip");
        eq.pairing.push_back(k);
    }
    return eq;
}

} // namespace dirichlet
