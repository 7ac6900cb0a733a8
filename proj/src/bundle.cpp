#include "dirichlet/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dirichlet/error.hpp"

namespace dirichlet {

Bundle::Bundle(std::vector<std::size_t> fiber_sizes) : fibers_(std::move(fiber_sizes)) {
    offsets_.resize(fibers_.size() + 1);
    Natural total = 0;
    for (std::size_t b = 0; b < fibers_.size(); ++b) {
        total += fibers_[b];
        offsets_[b + 1] = offsets_[b] + fibers_[b];
    }
    to_materialized_size(total, "bundle total set");
    owner_.reserve(offsets_.back());
    for (std::size_t b = 0; b < fibers_.size(); ++b) owner_.insert(owner_.end(), fibers_[b], b);
}

Bundle::Ingestion Bundle::from_projection(const FinFunction& projection) {
    std::vector<std::size_t> sizes(projection.cod().size, 0);
    for (auto b : projection.table()) ++sizes[b];
    Bundle bundle(sizes);
    std::vector<std::size_t> next(bundle.offsets_.begin(), bundle.offsets_.end() - 1);
    std::vector<std::size_t> relabel(projection.dom().size);
    for (std::size_t e = 0; e < relabel.size(); ++e) relabel[e] = next[projection(e)]++;
    return {bundle, FinFunction(projection.dom(), bundle.total(), std::move(relabel))};
}

std::vector<Bundle> enumerate_bundles(std::size_t max_base, std::size_t max_fiber) {
    std::vector<Bundle> out;
    for (std::size_t n = 0; n <= max_base; ++n) {
        for_each_table(n, max_fiber + 1, [&](std::span<const std::size_t> sizes) {
            out.emplace_back(std::vector<std::size_t>(sizes.begin(), sizes.end()));
        });
    }
    return out;
}

Fiber fiber(const Bundle& pi, std::size_t b) {
    if (b >= pi.base().size) {
        fail(ErrorKind::index_out_of_range, "base element " + std::to_string(b) + " not below |B| = " +
                                                std::to_string(pi.base().size));
    }
    FinSet set(pi.fiber_size(b));
    std::vector<std::size_t> t(set.size);
    std::iota(t.begin(), t.end(), pi.offset(b));
    return {set, pi.offset(b), FinFunction(set, pi.total(), std::move(t))};
}

BundleMap::BundleMap(Bundle src, Bundle dst, FinFunction base_map, FinFunction total_map)
    : src_(std::move(src)), dst_(std::move(dst)), base_(std::move(base_map)), total_(std::move(total_map)) {
    if (base_.dom() != src_.base() || base_.cod() != dst_.base()) {
        fail(ErrorKind::validation, "base_map must go from the source base (size " +
                                        std::to_string(src_.base().size) + ") to the target base (size " +
                                        std::to_string(dst_.base().size) + ")");
    }
    if (total_.dom() != src_.total() || total_.cod() != dst_.total()) {
        fail(ErrorKind::validation, "total_map must go from the source total set (size " +
                                        std::to_string(src_.total().size) + ") to the target total set (size " +
                                        std::to_string(dst_.total().size) + ")");
    }
    for (std::size_t e = 0; e < src_.total().size; ++e) {
        if (dst_.project(total_(e)) != base_(src_.project(e))) {
            fail(ErrorKind::not_commuting, "square does not commute at total element " + std::to_string(e));
        }
    }
}

std::vector<std::size_t> BundleMap::fiber_table(std::size_t b) const {
    std::vector<std::size_t> t(src_.fiber_size(b));
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = dst_.decode(total_(src_.encode(b, i))).second;
    return t;
}

BundleMap identity_map(const Bundle& pi) {
    return {pi, pi, identity(pi.base()), identity(pi.total())};
}

BundleMap bundle_map_from_fibers(const Bundle& src, const Bundle& dst, const FinFunction& base_map,
                                 const std::vector<std::vector<std::size_t>>& fiber_tables) {
    if (fiber_tables.size() != src.base().size) {
        fail(ErrorKind::validation, "need one fiber table per source base element");
    }
    if (base_map.dom() != src.base() || base_map.cod() != dst.base()) {
        fail(ErrorKind::validation, "base_map does not match the bundle bases");
    }
    std::vector<std::size_t> total(src.total().size);
    for (std::size_t b = 0; b < src.base().size; ++b) {
        const auto& t = fiber_tables[b];
        const auto fb = base_map(b);
        if (t.size() != src.fiber_size(b)) fail(ErrorKind::validation, "fiber table has the wrong length");
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] >= dst.fiber_size(fb)) fail(ErrorKind::validation, "fiber table entry out of range");
            total[src.encode(b, i)] = dst.encode(fb, t[i]);
        }
    }
    return {src, dst, base_map, FinFunction(src.total(), dst.total(), std::move(total))};
}

BundleMap compose_maps(const BundleMap& g, const BundleMap& f) {
    if (!(f.dst() == g.src())) fail(ErrorKind::shape_mismatch, "bundle maps are not composable");
    return {f.src(), g.dst(), compose(g.base_map(), f.base_map()), compose(g.total_map(), f.total_map())};
}

ContraBundleMap::ContraBundleMap(Bundle src, Bundle dst, FinFunction base_map, std::vector<FinFunction> fiber_back)
    : src_(std::move(src)), dst_(std::move(dst)), base_(std::move(base_map)), back_(std::move(fiber_back)) {
    if (base_.dom() != src_.base() || base_.cod() != dst_.base()) {
        fail(ErrorKind::validation, "base_map does not match the bundle bases");
    }
    if (back_.size() != src_.base().size) {
        fail(ErrorKind::validation, "need one backward fiber map per source base element");
    }
    for (std::size_t b = 0; b < back_.size(); ++b) {
        if (back_[b].dom().size != dst_.fiber_size(base_(b)) || back_[b].cod().size != src_.fiber_size(b)) {
            fail(ErrorKind::validation, "fiber_back[" + std::to_string(b) + "] must map E'_{f(b)} to E_b");
        }
    }
}

ContraBundleMap identity_contra(const Bundle& pi) {
    std::vector<FinFunction> back;
    for (std::size_t b = 0; b < pi.base().size; ++b) back.push_back(identity(FinSet(pi.fiber_size(b))));
    return {pi, pi, identity(pi.base()), std::move(back)};
}

ContraBundleMap compose_contra(const ContraBundleMap& g, const ContraBundleMap& f) {
    if (!(f.dst() == g.src())) fail(ErrorKind::shape_mismatch, "contravariant maps are not composable");
    std::vector<FinFunction> back;
    for (std::size_t b = 0; b < f.src().base().size; ++b) {
        back.push_back(compose(f.fiber_back()[b], g.fiber_back()[f.base_map()(b)]));
    }
    return {f.src(), g.dst(), compose(g.base_map(), f.base_map()), std::move(back)};
}

namespace {

bool fiberwise_bijective(const BundleMap& m) {
    for (std::size_t b = 0; b < m.src().base().size; ++b) {
        const auto target = m.dst().fiber_size(m.base_map()(b));
        if (m.src().fiber_size(b) != target) return false;
        if (!is_bijective(FinFunction(m.fiber_table(b), FinSet(target)))) return false;
    }
    return true;
}

bool mediating_map_bijective(const BundleMap& m) {
    auto pb = pullback(m.dst().projection(), m.base_map());
    if (pb.apex != m.src().total()) return false;
    std::vector<bool> hit(pb.apex.size, false);
    for (std::size_t e = 0; e < m.src().total().size; ++e) {
        auto k = pullback_index(pb, m.total_map()(e), m.src().project(e));
        if (k == npos || hit[k]) return false;
        hit[k] = true;
    }
    return true;
}

} // namespace

bool is_cartesian(const BundleMap& m) {
    const bool by_fibers = fiberwise_bijective(m);
    if (by_fibers != mediating_map_bijective(m)) {
        throw std::logic_error("is_cartesian: fiberwise and pullback tests disagree");
    }
    return by_fibers;
}

BundleMap contra_to_cartesian_covariant(const ContraBundleMap& m) {
    std::vector<std::vector<std::size_t>> tables;
    for (std::size_t b = 0; b < m.src().base().size; ++b) {
        const auto& back = m.fiber_back()[b];
        if (!is_bijective(back)) {
            fail(ErrorKind::not_fiberwise_bijective, "fiber_back[" + std::to_string(b) + "] is not a bijection");
        }
        auto fwd = inverse(back);
        tables.emplace_back(fwd.table().begin(), fwd.table().end());
    }
    return bundle_map_from_fibers(m.src(), m.dst(), m.base_map(), tables);
}

ContraBundleMap cartesian_covariant_to_contra(const BundleMap& m) {
    if (!is_cartesian(m)) fail(ErrorKind::not_cartesian, "bundle map is not a pullback square");
    std::vector<FinFunction> back;
    for (std::size_t b = 0; b < m.src().base().size; ++b) {
        FinSet fb(m.src().fiber_size(b));
        back.push_back(inverse(FinFunction(fb, fb, m.fiber_table(b))));
    }
    return {m.src(), m.dst(), m.base_map(), std::move(back)};
}

SliceObject::SliceObject(FinSet over_, Bundle bundle_) : over(over_), bundle(std::move(bundle_)) {
    if (bundle.base() != over) {
        fail(ErrorKind::base_mismatch, "slice bundle has base of size " + std::to_string(bundle.base().size) +
                                           ", expected " + std::to_string(over.size));
    }
}

FinSet sigma(const Bundle& pi) { return pi.total(); }

SliceObject pi_along(const Bundle& pi, const SliceObject& q) {
    if (q.over != pi.total()) fail(ErrorKind::base_mismatch, "pi_along: q must live over the total set of pi");
    std::vector<std::size_t> sizes(pi.base().size);
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        Natural sections = 1;
        for (std::size_t i = 0; i < pi.fiber_size(b); ++i) sections *= q.bundle.fiber_size(pi.encode(b, i));
        sizes[b] = to_materialized_size(sections, "pi_along fiber");
    }
    return SliceObject(pi.base(), Bundle(std::move(sizes)));
}

SliceObject delta(const FinFunction& f, const SliceObject& q) {
    if (f.cod() != q.over) fail(ErrorKind::base_mismatch, "delta: f must land in the base of q");
    std::vector<std::size_t> sizes(f.dom().size);
    for (std::size_t x = 0; x < sizes.size(); ++x) sizes[x] = q.bundle.fiber_size(f(x));
    return SliceObject(f.dom(), Bundle(std::move(sizes)));
}

BundleMap delta_projection(const FinFunction& f, const Bundle& q) {
    auto pulled = delta(f, SliceObject(q)).bundle;
    std::vector<std::size_t> total(pulled.total().size);
    for (std::size_t e = 0; e < total.size(); ++e) {
        auto [x, i] = pulled.decode(e);
        total[e] = q.encode(f(x), i);
    }
    return {pulled, q, f, FinFunction(pulled.total(), q.total(), std::move(total))};
}

SliceObject fiberwise_hom(const SliceObject& q, const SliceObject& r) {
    if (q.over != r.over) fail(ErrorKind::base_mismatch, "fiberwise_hom: slices over different bases");
    std::vector<std::size_t> sizes(q.over.size);
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        sizes[b] = checked_power(r.bundle.fiber_size(b), q.bundle.fiber_size(b), "fiberwise hom");
    }
    return SliceObject(q.over, Bundle(std::move(sizes)));
}

Bundle constant_bundle(FinSet x) { return Bundle(std::vector<std::size_t>(x.size, 1)); }

Bundle bang_up(FinSet x) { return Bundle(std::vector<std::size_t>(x.size, 0)); }

Bundle bang_down(FinSet x) { return Bundle({x.size}); }

ZeroLocus zc(const Bundle& pi) {
    std::vector<std::size_t> t;
    for (std::size_t b = 0; b < pi.base().size; ++b) {
        if (pi.fiber_size(b) == 0) t.push_back(b);
    }
    FinSet subset(t.size());
    return {subset, FinFunction(subset, pi.base(), std::move(t))};
}

BundleMap constant_map(const FinFunction& g) {
    return {constant_bundle(g.dom()), constant_bundle(g.cod()), g, g};
}

BundleMap bang_up_map(const FinFunction& g) {
    return {bang_up(g.dom()), bang_up(g.cod()), g, from_initial(FinSet(0))};
}

BundleMap bang_down_map(const FinFunction& g) {
    return {bang_down(g.dom()), bang_down(g.cod()), identity(FinSet(1)), g};
}

Factorization factor_vertical_cartesian(const BundleMap& m) {
    auto cart = delta_projection(m.base_map(), m.dst());
    const auto& mid = cart.src();
    std::vector<std::size_t> total(m.src().total().size);
    for (std::size_t e = 0; e < total.size(); ++e) {
        auto b = m.src().project(e);
        total[e] = mid.encode(b, m.dst().decode(m.total_map()(e)).second);
    }
    BundleMap vertical(m.src(), mid, identity(m.src().base()), FinFunction(m.src().total(), mid.total(), std::move(total)));
    return {std::move(vertical), std::move(cart)};
}

} // namespace dirichlet
