#include "dirichlet/functor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dirichlet/error.hpp"
#include "dirichlet/hom.hpp"

namespace dirichlet {

SumOfPowers::SumOfPowers(std::vector<std::size_t> radices, std::vector<std::size_t> lengths)
    : radices_(std::move(radices)), lengths_(std::move(lengths)), offsets_(radices_.size() + 1, 0) {
    Natural total = 0;
    for (std::size_t b = 0; b < radices_.size(); ++b) total += power(Natural(radices_[b]), lengths_[b]);
    to_materialized_size(total, "functor evaluation");
    for (std::size_t b = 0; b < radices_.size(); ++b) {
        offsets_[b + 1] = offsets_[b] + power(Natural(radices_[b]), lengths_[b]).convert_to<std::size_t>();
    }
}

std::size_t SumOfPowers::encode(std::size_t b, std::span<const std::size_t> digits) const {
    return offsets_[b] + encode_function(digits, radices_[b]);
}

std::pair<std::size_t, std::vector<std::size_t>> SumOfPowers::decode(std::size_t code) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), code);
    auto b = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    return {b, decode_function(code - offsets_[b], lengths_[b], radices_[b])};
}

namespace {

SumOfPowers dirichlet_codec(const Bundle& pi, FinSet x) {
    return {pi.fiber_sizes(), std::vector<std::size_t>(pi.base().size, x.size)};
}

SumOfPowers poly_codec(const Bundle& pi, FinSet x) {
    return {std::vector<std::size_t>(pi.base().size, x.size), pi.fiber_sizes()};
}

} // namespace

DirichletSet::DirichletSet(Bundle pi, FinSet x) : pi_(std::move(pi)), x_(x), codec_(dirichlet_codec(pi_, x_)) {}

std::size_t DirichletSet::encode(const DirichletElement& el) const {
    if (el.base >= pi_.base().size || el.fiber_datum.size() != x_.size) {
        fail(ErrorKind::validation, "Dirichlet element has the wrong shape");
    }
    for (auto v : el.fiber_datum) {
        if (v >= pi_.fiber_size(el.base)) fail(ErrorKind::validation, "Dirichlet element entry out of fiber range");
    }
    return codec_.encode(el.base, el.fiber_datum);
}

DirichletElement DirichletSet::decode(std::size_t code) const {
    if (code >= set().size) fail(ErrorKind::index_out_of_range, "Dirichlet code out of range");
    auto [b, h] = codec_.decode(code);
    return {b, std::move(h)};
}

PolySet::PolySet(Bundle pi, FinSet x) : pi_(std::move(pi)), x_(x), codec_(poly_codec(pi_, x_)) {}

std::size_t PolySet::encode(const PolyElement& el) const {
    if (el.base >= pi_.base().size || el.fiber_datum.size() != pi_.fiber_size(el.base)) {
        fail(ErrorKind::validation, "polynomial element has the wrong shape");
    }
    for (auto v : el.fiber_datum) {
        if (v >= x_.size) fail(ErrorKind::validation, "polynomial element entry out of range");
    }
    return codec_.encode(el.base, el.fiber_datum);
}

PolyElement PolySet::decode(std::size_t code) const {
    if (code >= set().size) fail(ErrorKind::index_out_of_range, "polynomial code out of range");
    auto [b, t] = codec_.decode(code);
    return {b, std::move(t)};
}

Natural dir_size(const Bundle& pi, FinSet x) {
    Natural total = 0;
    for (auto k : pi.fiber_sizes()) total += power(Natural(k), x.size);
    return total;
}

Natural poly_size(const Bundle& pi, FinSet x) {
    Natural total = 0;
    for (auto k : pi.fiber_sizes()) total += power(Natural(x.size), k);
    return total;
}

DirichletSet dir_eval(const Bundle& pi, FinSet x) { return {pi, x}; }

FinFunction dir_eval_map(const Bundle& pi, const FinFunction& g) {
    auto from = dir_eval(pi, g.cod());
    auto to = dir_eval(pi, g.dom());
    std::vector<std::size_t> t(from.set().size);
    std::vector<std::size_t> h(g.dom().size);
    for (std::size_t code = 0; code < t.size(); ++code) {
        auto el = from.decode(code);
        for (std::size_t x = 0; x < h.size(); ++x) h[x] = el.fiber_datum[g(x)];
        t[code] = to.encode({el.base, h});
    }
    return {from.set(), to.set(), std::move(t)};
}

PolySet poly_eval(const Bundle& pi, FinSet x) { return {pi, x}; }

FinFunction poly_eval_map(const Bundle& pi, const FinFunction& g) {
    auto from = poly_eval(pi, g.dom());
    auto to = poly_eval(pi, g.cod());
    std::vector<std::size_t> t(from.set().size);
    for (std::size_t code = 0; code < t.size(); ++code) {
        auto el = from.decode(code);
        for (auto& v : el.fiber_datum) v = g(v);
        t[code] = to.encode(el);
    }
    return {from.set(), to.set(), std::move(t)};
}

Natural poly_size_via_composite(const Bundle& pi, FinSet x) {
    auto over_e = delta(to_terminal(pi.total()), SliceObject(Bundle({x.size})));
    auto sections = pi_along(pi, over_e);
    return Natural(sigma(sections.bundle).size);
}

// ---------------------------------------------------------------------------

std::string_view to_string(Presentation p) {
    switch (p) {
    case Presentation::sum: return "sum";
    case Presentation::hom: return "hom";
    case Presentation::limit: return "limit";
    case Presentation::pullback: return "pullback";
    case Presentation::slice: return "slice";
    }
    return "?";
}

std::optional<Presentation> parse_presentation(std::string_view name) {
    for (auto p : all_presentations) {
        if (to_string(p) == name) return p;
    }
    return std::nullopt;
}

QuiverDiagram left_cone_diagram(const Bundle& pi, FinSet x) {
    QuiverDiagram d;
    d.objects.push_back(pi.base());
    auto proj = pi.projection();
    for (std::size_t i = 0; i < x.size; ++i) {
        d.objects.push_back(pi.total());
        d.edges.push_back({i + 1, 0, proj});
    }
    return d;
}

namespace {

// Hom(!_X, π): each map is keyed by (base point, total table).
struct HomModel {
    std::vector<BundleMap> maps;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;

    HomModel(const Bundle& pi, FinSet x) : maps(enumerate_covariant_maps(bang_down(x), pi)) {
        for (std::size_t i = 0; i < maps.size(); ++i) index.emplace(key(maps[i]), i);
    }

    static std::pair<std::size_t, std::vector<std::size_t>> key(const BundleMap& m) {
        auto t = m.total_map().table();
        return {m.base_map()(0), {t.begin(), t.end()}};
    }
};

struct PullbackModel {
    FinSet functions_x_e;
    Pullback pb;

    PullbackModel(const Bundle& pi, FinSet x) : functions_x_e(exponential(pi.total(), x)) {
        auto functions_x_b = exponential(pi.base(), x);
        const std::size_t ne = pi.total().size;
        const std::size_t nb = pi.base().size;
        std::vector<std::size_t> post(functions_x_e.size);
        std::vector<std::size_t> s_b(x.size);
        for (std::size_t code = 0; code < post.size(); ++code) {
            auto s = decode_function(code, x.size, ne);
            for (std::size_t i = 0; i < x.size; ++i) s_b[i] = pi.project(s[i]);
            post[code] = encode_function(s_b, nb);
        }
        std::vector<std::size_t> consts(nb);
        for (std::size_t b = 0; b < nb; ++b) {
            std::vector<std::size_t> c(x.size, b);
            consts[b] = encode_function(c, nb);
        }
        pb = pullback(FinFunction(functions_x_e, functions_x_b, std::move(post)),
                      FinFunction(pi.base(), functions_x_b, std::move(consts)));
    }
};

struct SliceModel {
    SliceObject homs;

    SliceModel(const Bundle& pi, FinSet x)
        : homs(fiberwise_hom(delta(to_terminal(pi.base()), SliceObject(Bundle({x.size}))), SliceObject(pi))) {}
};

DirichletElement from_total_table(const Bundle& pi, std::size_t b, std::span<const std::size_t> total) {
    DirichletElement el{b, {}};
    for (auto e : total) el.fiber_datum.push_back(e - pi.offset(b));
    return el;
}

} // namespace

PresentedSet dir_eval_via(Presentation method, const Bundle& pi, FinSet x) {
    auto sum = dir_eval(pi, x);
    std::vector<std::size_t> to_sum;
    FinSet carrier;
    switch (method) {
    case Presentation::sum:
        return {method, sum.set(), identity(sum.set())};
    case Presentation::hom: {
        HomModel hom(pi, x);
        carrier = FinSet(hom.maps.size());
        for (const auto& m : hom.maps) {
            to_sum.push_back(sum.encode(from_total_table(pi, m.base_map()(0), m.total_map().table())));
        }
        break;
    }
    case Presentation::limit: {
        auto lim = limit_of_quiver(left_cone_diagram(pi, x));
        carrier = lim.apex;
        for (const auto& tuple : lim.tuples) {
            to_sum.push_back(sum.encode(from_total_table(pi, tuple[0], std::span(tuple).subspan(1))));
        }
        break;
    }
    case Presentation::pullback: {
        PullbackModel model(pi, x);
        carrier = model.pb.apex;
        for (std::size_t k = 0; k < carrier.size; ++k) {
            auto s = decode_function(model.pb.p1(k), x.size, pi.total().size);
            to_sum.push_back(sum.encode(from_total_table(pi, model.pb.p2(k), s)));
        }
        break;
    }
    case Presentation::slice: {
        SliceModel model(pi, x);
        const auto& fibers = model.homs.bundle;
        carrier = sigma(fibers);
        for (std::size_t e = 0; e < carrier.size; ++e) {
            auto [b, code] = fibers.decode(e);
            to_sum.push_back(sum.encode({b, decode_function(code, x.size, pi.fiber_size(b))}));
        }
        break;
    }
    }
    return {method, carrier, FinFunction(carrier, sum.set(), std::move(to_sum))};
}

FinFunction dir_eval_via_map(Presentation method, const Bundle& pi, const FinFunction& g) {
    const FinSet x = g.dom();
    const FinSet xp = g.cod();
    std::vector<std::size_t> t;
    switch (method) {
    case Presentation::sum:
        return dir_eval_map(pi, g);
    case Presentation::hom: {
        HomModel from(pi, xp), to(pi, x);
        auto restrict_along = bang_down_map(g);
        for (const auto& m : from.maps) t.push_back(to.index.at(HomModel::key(compose_maps(m, restrict_along))));
        return {FinSet(from.maps.size()), FinSet(to.maps.size()), std::move(t)};
    }
    case Presentation::limit: {
        auto from = limit_of_quiver(left_cone_diagram(pi, xp));
        auto to = limit_of_quiver(left_cone_diagram(pi, x));
        std::vector<std::size_t> restricted(x.size + 1);
        for (const auto& tuple : from.tuples) {
            restricted[0] = tuple[0];
            for (std::size_t i = 0; i < x.size; ++i) restricted[i + 1] = tuple[g(i) + 1];
            t.push_back(to.index_of(restricted));
        }
        return {from.apex, to.apex, std::move(t)};
    }
    case Presentation::pullback: {
        PullbackModel from(pi, xp), to(pi, x);
        const std::size_t ne = pi.total().size;
        std::vector<std::size_t> s(x.size);
        for (std::size_t k = 0; k < from.pb.apex.size; ++k) {
            auto sp = decode_function(from.pb.p1(k), xp.size, ne);
            for (std::size_t i = 0; i < x.size; ++i) s[i] = sp[g(i)];
            t.push_back(pullback_index(to.pb, encode_function(s, ne), from.pb.p2(k)));
        }
        return {from.pb.apex, to.pb.apex, std::move(t)};
    }
    case Presentation::slice: {
        SliceModel from(pi, xp), to(pi, x);
        const auto& fb = from.homs.bundle;
        const auto& tb = to.homs.bundle;
        std::vector<std::size_t> h(x.size);
        for (std::size_t e = 0; e < fb.total().size; ++e) {
            auto [b, code] = fb.decode(e);
            auto hp = decode_function(code, xp.size, pi.fiber_size(b));
            for (std::size_t i = 0; i < x.size; ++i) h[i] = hp[g(i)];
            t.push_back(tb.encode(b, encode_function(h, pi.fiber_size(b))));
        }
        return {fb.total(), tb.total(), std::move(t)};
    }
    }
    throw std::logic_error("unknown presentation");
}

// ---------------------------------------------------------------------------

FinFunction nat_component(const NatTransform& t, FinSet x) {
    const auto& m = t.carrier();
    auto from = dir_eval(t.src(), x);
    auto to = dir_eval(t.dst(), x);
    std::vector<std::vector<std::size_t>> fiber_tables(t.src().base().size);
    for (std::size_t b = 0; b < fiber_tables.size(); ++b) fiber_tables[b] = m.fiber_table(b);
    std::vector<std::size_t> table(from.set().size);
    for (std::size_t code = 0; code < table.size(); ++code) {
        auto el = from.decode(code);
        const auto& local = fiber_tables[el.base];
        for (auto& v : el.fiber_datum) v = local[v];
        el.base = m.base_map()(el.base);
        table[code] = to.encode(el);
    }
    return {from.set(), to.set(), std::move(table)};
}

std::vector<FinFunction> probe_morphisms(std::size_t probe_max) {
    std::vector<FinFunction> out;
    for (std::size_t a = 0; a <= probe_max; ++a) {
        for (std::size_t c = 0; c <= probe_max; ++c) {
            auto fs = all_functions(FinSet(a), FinSet(c));
            out.insert(out.end(), std::make_move_iterator(fs.begin()), std::make_move_iterator(fs.end()));
        }
    }
    return out;
}

std::string SquareFailure::describe() const {
    std::ostringstream os;
    os << "square at g : " << g.dom().size << " -> " << g.cod().size << " [";
    for (std::size_t i = 0; i < g.dom().size; ++i) os << (i ? "," : "") << g(i);
    os << "], element " << element;
    return os.str();
}

namespace {

void validate_family(const NaturalFamily& family) {
    if (family.components.size() != family.probe_max + 1) {
        fail(ErrorKind::validation, "natural family needs one component per size 0..probe_max");
    }
    for (std::size_t x = 0; x <= family.probe_max; ++x) {
        const auto& c = family.components[x];
        if (Natural(c.dom().size) != dir_size(family.src, FinSet(x)) ||
            Natural(c.cod().size) != dir_size(family.dst, FinSet(x))) {
            fail(ErrorKind::validation, "component at size " + std::to_string(x) + " has the wrong shape");
        }
    }
}

} // namespace

NaturalityReport check_naturality(const NaturalFamily& family) {
    validate_family(family);
    NaturalityReport report;
    for (const auto& g : probe_morphisms(family.probe_max)) {
        auto d_g = dir_eval_map(family.src, g);
        auto dp_g = dir_eval_map(family.dst, g);
        const auto& t_x = family.components[g.dom().size];
        const auto& t_xp = family.components[g.cod().size];
        ++report.squares_checked;
        for (std::size_t a = 0; a < d_g.dom().size; ++a) {
            if (dp_g(t_xp(a)) != t_x(d_g(a))) {
                report.failure = SquareFailure{g, a};
                return report;
            }
        }
    }
    return report;
}

NaturalityReport check_naturality(const NatTransform& t, std::size_t probe_max) {
    NaturalFamily family{t.src(), t.dst(), probe_max, {}};
    for (std::size_t x = 0; x <= probe_max; ++x) family.components.push_back(nat_component(t, FinSet(x)));
    return check_naturality(family);
}

bool naturality_square_is_pullback(const NaturalFamily& family, const FinFunction& g) {
    auto d_g = dir_eval_map(family.src, g);
    auto dp_g = dir_eval_map(family.dst, g);
    const auto& t_x = family.components[g.dom().size];
    const auto& t_xp = family.components[g.cod().size];
    auto pb = pullback(t_x, dp_g);
    if (pb.apex != d_g.dom()) return false;
    std::vector<bool> hit(pb.apex.size, false);
    for (std::size_t a = 0; a < d_g.dom().size; ++a) {
        auto k = pullback_index(pb, d_g(a), t_xp(a));
        if (k == npos || hit[k]) return false;
        hit[k] = true;
    }
    return true;
}

bool is_cartesian_family(const NaturalFamily& family) {
    validate_family(family);
    for (const auto& g : probe_morphisms(family.probe_max)) {
        if (!naturality_square_is_pullback(family, g)) return false;
    }
    return true;
}

CartesianReport is_cartesian_nat(const NatTransform& t, std::size_t probe_max) {
    CartesianReport report;
    report.by_bundle = is_cartesian(t.carrier());
    NaturalFamily family{t.src(), t.dst(), probe_max, {}};
    for (std::size_t x = 0; x <= probe_max; ++x) family.components.push_back(nat_component(t, FinSet(x)));
    report.by_probe = true;
    for (const auto& g : probe_morphisms(probe_max)) {
        if (!naturality_square_is_pullback(family, g)) {
            report.by_probe = false;
            report.failing_square = g;
            break;
        }
    }
    return report;
}

namespace {

class DirichletActionCache {
public:
    explicit DirichletActionCache(const Bundle& pi) : pi_(pi) {}

    const FinFunction& operator()(const FinFunction& g) {
        auto it = cache_.find(g);
        if (it == cache_.end()) it = cache_.emplace(g, dir_eval_map(pi_, g)).first;
        return it->second;
    }

private:
    const Bundle& pi_;
    std::map<FinFunction, FinFunction> cache_;
};

std::string describe_span(std::string_view kind, const FinFunction& f, const FinFunction& g) {
    std::ostringstream os;
    os << kind << " of f=[";
    for (std::size_t i = 0; i < f.dom().size; ++i) os << (i ? "," : "") << f(i);
    os << "]:" << f.dom().size << "->" << f.cod().size << ", g=[";
    for (std::size_t i = 0; i < g.dom().size; ++i) os << (i ? "," : "") << g(i);
    os << "]:" << g.dom().size << "->" << g.cod().size;
    return os.str();
}

} // namespace

ConnectedLimitReport check_preserves_connected_limits(const Bundle& pi, std::size_t probe_max) {
    ConnectedLimitReport report;
    DirichletActionCache act(pi);
    std::vector<std::vector<std::vector<FinFunction>>> homs(probe_max + 1);
    for (std::size_t z = 0; z <= probe_max; ++z) {
        for (std::size_t x = 0; x <= probe_max; ++x) homs[z].push_back(all_functions(FinSet(z), FinSet(x)));
    }

    for (std::size_t z = 0; z <= probe_max; ++z) {
        for (std::size_t x = 0; x <= probe_max; ++x) {
            for (std::size_t y = 0; y <= probe_max; ++y) {
                for (const auto& f : homs[z][x]) {
                    for (const auto& g : homs[z][y]) {
                        ++report.pushouts_checked;
                        auto po = pushout(f, g);
                        const auto& d_q1 = act(po.q1);
                        const auto& d_q2 = act(po.q2);
                        auto pb = pullback(act(f), act(g));
                        bool ok = pb.apex == d_q1.dom();
                        std::vector<bool> hit(pb.apex.size, false);
                        for (std::size_t a = 0; ok && a < d_q1.dom().size; ++a) {
                            auto k = pullback_index(pb, d_q1(a), d_q2(a));
                            ok = k != npos && !hit[k];
                            if (ok) hit[k] = true;
                        }
                        if (!ok) {
                            report.failure = describe_span("pushout", f, g);
                            return report;
                        }
                    }
                }
            }
        }
    }

    for (std::size_t z = 0; z <= probe_max; ++z) {
        for (std::size_t x = 0; x <= probe_max; ++x) {
            for (const auto& f : homs[z][x]) {
                for (const auto& g : homs[z][x]) {
                    ++report.coequalizers_checked;
                    auto co = coequalizer(f, g);
                    const auto& d_q = act(co.q);
                    auto eq = equalizer(act(f), act(g));
                    auto inc = eq.inclusion.table();
                    bool ok = eq.apex == d_q.dom();
                    std::vector<bool> hit(eq.apex.size, false);
                    for (std::size_t a = 0; ok && a < d_q.dom().size; ++a) {
                        auto it = std::lower_bound(inc.begin(), inc.end(), d_q(a));
                        ok = it != inc.end() && *it == d_q(a);
                        if (ok) {
                            auto k = static_cast<std::size_t>(it - inc.begin());
                            ok = !hit[k];
                            hit[k] = true;
                        }
                    }
                    if (!ok) {
                        report.failure = describe_span("coequalizer", f, g);
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

namespace {

struct CompositeBase {
    std::size_t p_base;
    std::vector<std::size_t> choice; // E_{P,b} → B_D
};

std::vector<CompositeBase> composite_base(const Bundle& p, const Bundle& d) {
    Natural count = 0;
    for (auto k : p.fiber_sizes()) count += power(Natural(d.base().size), k);
    to_materialized_size(count, "P∘D base");
    std::vector<CompositeBase> out;
    for (std::size_t b = 0; b < p.base().size; ++b) {
        for_each_table(p.fiber_size(b), d.base().size, [&](std::span<const std::size_t> g) {
            out.push_back({b, {g.begin(), g.end()}});
        });
    }
    return out;
}

} // namespace

Bundle compose_poly_after_dirichlet(const Bundle& p, const Bundle& d) {
    std::vector<std::size_t> sizes;
    for (const auto& base : composite_base(p, d)) {
        Natural prod = 1;
        for (auto j : base.choice) prod *= d.fiber_size(j);
        sizes.push_back(to_materialized_size(prod, "P∘D fiber"));
    }
    return Bundle(std::move(sizes));
}

FinFunction compose_pd_iso(const Bundle& p, const Bundle& d, FinSet x) {
    auto bases = composite_base(p, d);
    auto composite = compose_poly_after_dirichlet(p, d);
    auto source = dir_eval(composite, x);
    auto inner = dir_eval(d, x);
    auto target = poly_eval(p, inner.set());
    std::vector<std::size_t> table(source.set().size);
    for (std::size_t code = 0; code < table.size(); ++code) {
        auto el = source.decode(code);
        const auto& base = bases[el.base];
        const std::size_t width = base.choice.size();
        // h(x) indexes Π_e E_{D,g(e)} mixed radix; split it into one digit per e.
        std::vector<std::vector<std::size_t>> digits(x.size, std::vector<std::size_t>(width));
        for (std::size_t i = 0; i < x.size; ++i) {
            std::size_t v = el.fiber_datum[i];
            for (std::size_t e = width; e-- > 0;) {
                const auto r = d.fiber_size(base.choice[e]);
                digits[i][e] = v % r;
                v /= r;
            }
        }
        PolyElement out{base.p_base, std::vector<std::size_t>(width)};
        std::vector<std::size_t> h(x.size);
        for (std::size_t e = 0; e < width; ++e) {
            for (std::size_t i = 0; i < x.size; ++i) h[i] = digits[i][e];
            out.fiber_datum[e] = inner.encode({base.choice[e], h});
        }
        table[code] = target.encode(out);
    }
    return {source.set(), target.set(), std::move(table)};
}

FinFunction poly_nat_component(const ContraBundleMap& m, FinSet x) {
    auto from = poly_eval(m.src(), x);
    auto to = poly_eval(m.dst(), x);
    std::vector<std::size_t> table(from.set().size);
    for (std::size_t code = 0; code < table.size(); ++code) {
        auto el = from.decode(code);
        const auto& back = m.fiber_back()[el.base];
        PolyElement out{m.base_map()(el.base), std::vector<std::size_t>(back.dom().size)};
        for (std::size_t e = 0; e < out.fiber_datum.size(); ++e) out.fiber_datum[e] = el.fiber_datum[back(e)];
        table[code] = to.encode(out);
    }
    return {from.set(), to.set(), std::move(table)};
}

} // namespace dirichlet
