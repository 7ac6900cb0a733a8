#include "dirichlet/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "dirichlet/adjunction.hpp"
#include "dirichlet/equivalence.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/functor.hpp"
#include "dirichlet/hom.hpp"
#include "dirichlet/series.hpp"

namespace dirichlet {

namespace {

std::string fibers_str(const Bundle& pi) {
    std::ostringstream os;
    os << "[";
    for (std::size_t b = 0; b < pi.base().size; ++b) os << (b ? "," : "") << pi.fiber_size(b);
    os << "]";
    return os.str();
}

std::string table_str(const FinFunction& f) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < f.dom().size; ++i) os << (i ? "," : "") << f(i);
    os << "]:" << f.dom().size << "->" << f.cod().size;
    return os.str();
}

/// Collects the first failure and a running tally of what was checked.
class Tally {
public:
    void expect(bool cond, const std::function<std::string()>& what) {
        ++checked_;
        if (!cond && !failure_) failure_ = what();
    }
    bool ok() const { return !failure_; }
    void note(std::string s) { notes_.push_back(std::move(s)); }

    CheckResult finish(const CheckInfo& info) const {
        std::ostringstream os;
        if (failure_) {
            os << "first failure: " << *failure_;
        } else {
            os << checked_ << " assertions";
            for (const auto& n : notes_) os << "; " << n;
        }
        return {std::string(info.id), std::string(info.title), ok(), os.str()};
    }

private:
    std::size_t checked_ = 0;
    std::optional<std::string> failure_;
    std::vector<std::string> notes_;
};

std::vector<Bundle> single_corpus(const VerifyOptions& o) {
    auto out = enumerate_bundles(o.max_size, o.max_size);
    for (const auto& b : o.extra_bundles) {
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    return out;
}

std::size_t pair_scale(const VerifyOptions& o) { return std::min<std::size_t>(o.max_size, 2); }

std::vector<Bundle> pair_corpus(const VerifyOptions& o) { return enumerate_bundles(pair_scale(o), pair_scale(o)); }

void presentations(const VerifyOptions& o, Tally& t) {
    const auto probes = probe_morphisms(o.max_size);
    for (const auto& pi : single_corpus(o)) {
        for (auto method : all_presentations) {
            std::vector<PresentedSet> sets;
            for (std::size_t x = 0; x <= o.max_size; ++x) {
                sets.push_back(dir_eval_via(method, pi, FinSet(x)));
                const auto& p = sets.back();
                t.expect(Natural(p.carrier.size) == dir_size(pi, FinSet(x)) && is_bijective(p.to_sum), [&] {
                    return std::string(to_string(method)) + " at fibers " + fibers_str(pi) + ", |X|=" +
                           std::to_string(x) + ": size " + std::to_string(p.carrier.size);
                });
            }
            for (const auto& g : probes) {
                const auto& from = sets[g.cod().size];
                const auto& to = sets[g.dom().size];
                t.expect(compose(to.to_sum, dir_eval_via_map(method, pi, g)) ==
                             compose(dir_eval_map(pi, g), from.to_sum),
                         [&] {
                             return std::string(to_string(method)) + " bijection not natural at fibers " +
                                    fibers_str(pi) + ", g=" + table_str(g);
                         });
            }
        }
    }
}

void equivalence(const VerifyOptions& o, Tally& t) {
    const auto n = std::max<std::size_t>(o.max_size, 1);
    auto run_pair = [&](const Bundle& s, const Bundle& d) {
        auto fams = enumerate_natural_families(s, d, n);
        auto maps = enumerate_covariant_maps(s, d);
        t.expect(fams.size() == maps.size(), [&] {
            return fibers_str(s) + " -> " + fibers_str(d) + ": " + std::to_string(fams.size()) + " families vs " +
                   std::to_string(maps.size()) + " bundle maps";
        });
        for (const auto& m : maps) {
            t.expect(restrict_at_bang0(extend_from_bang0(m, n)) == m,
                     [&] { return "restrict . extend != id on a map " + fibers_str(s) + " -> " + fibers_str(d); });
        }
        for (const auto& f : fams) {
            t.expect(extend_from_bang0(restrict_at_bang0(f), n) == f,
                     [&] { return "extend . restrict != id on a family " + fibers_str(s) + " -> " + fibers_str(d); });
        }
        return fams.size();
    };
    auto corpus = pair_corpus(o);
    for (const auto& s : corpus)
        for (const auto& d : corpus) run_pair(s, d);
    auto witness = run_pair(Bundle({2}), Bundle({1, 3}));
    t.expect(witness == 10, [&] { return "[2] -> [1,3] gave " + std::to_string(witness) + " families, expected 10"; });
    t.note("witness [2] -> [1,3]: " + std::to_string(witness) + " families, probe " + std::to_string(n));
}

void cartesian(const VerifyOptions& o, Tally& t) {
    auto corpus = pair_corpus(o);
    for (const auto& s : corpus)
        for (const auto& d : corpus) {
            std::size_t by_probe = 0;
            for (const auto& m : enumerate_covariant_maps(s, d)) {
                auto r = is_cartesian_nat(NatTransform(m), o.max_size);
                t.expect(r.by_bundle == r.by_probe, [&] {
                    return "by_bundle != by_probe on a map " + fibers_str(s) + " -> " + fibers_str(d);
                });
                by_probe += r.by_probe;
            }
            auto cart = enumerate_cartesian_maps(s, d).size();
            t.expect(cart == by_probe, [&] {
                return fibers_str(s) + " -> " + fibers_str(d) + ": " + std::to_string(cart) + " cartesian maps vs " +
                       std::to_string(by_probe) + " pullback families";
            });
        }
}

void poly_dir(const VerifyOptions& o, Tally& t) {
    auto corpus = pair_corpus(o);
    for (const auto& s : corpus)
        for (const auto& d : corpus) {
            auto e = poly_dir_cartesian_equiv(s, d);
            auto sorted = e.pairing;
            std::sort(sorted.begin(), sorted.end());
            bool perm = e.dir_side.size() == e.poly_side.size();
            for (std::size_t i = 0; perm && i < sorted.size(); ++i) perm = sorted[i] == i;
            t.expect(perm, [&] { return "translation not bijective for " + fibers_str(s) + " -> " + fibers_str(d); });
        }
    for (const auto& a : corpus) {
        t.expect(cartesian_covariant_to_contra(identity_map(a)) == identity_contra(a),
                 [&] { return "identity not preserved at " + fibers_str(a); });
        for (const auto& b : corpus)
            for (const auto& c : corpus)
                for (const auto& f : enumerate_cartesian_maps(a, b))
                    for (const auto& g : enumerate_cartesian_maps(b, c)) {
                        t.expect(cartesian_covariant_to_contra(compose_maps(g, f)) ==
                                     compose_contra(cartesian_covariant_to_contra(g), cartesian_covariant_to_contra(f)),
                                 [&] {
                                     return "composition not preserved on " + fibers_str(a) + " -> " + fibers_str(b) +
                                            " -> " + fibers_str(c);
                                 });
                    }
    }
    auto rep = poly_dir_cartesian_equiv(Bundle({3}), Bundle({3}));
    t.expect(rep.dir_side.size() == 6 && rep.poly_side.size() == 6, [&] {
        return "representable n=3: " + std::to_string(rep.dir_side.size()) + " vs " +
               std::to_string(rep.poly_side.size()) + ", expected 6";
    });
    t.note("representable n=3: " + std::to_string(rep.dir_side.size()) + " maps each side");
}

void factorization(const VerifyOptions& o, Tally& t) {
    auto corpus = pair_corpus(o);
    for (const auto& s : corpus)
        for (const auto& d : corpus)
            for (const auto& m : enumerate_covariant_maps(s, d)) {
                auto what = [&] { return "map " + fibers_str(s) + " -> " + fibers_str(d) + ", base " + table_str(m.base_map()); };
                auto fac = factor_vertical_cartesian(m);
                t.expect(compose_maps(fac.cartesian, fac.vertical) == m, [&] { return what() + ": recomposition"; });
                t.expect(is_cartesian(fac.cartesian), [&] { return what() + ": cartesian part"; });
                t.expect(fac.vertical.base_map() == identity(s.base()), [&] { return what() + ": vertical base"; });
                std::size_t lifts = 0;
                for (const auto& v : enumerate_covariant_maps(s, fac.cartesian.src())) {
                    lifts += v.base_map() == identity(s.base()) && compose_maps(fac.cartesian, v) == m;
                }
                t.expect(lifts == 1, [&] { return what() + ": " + std::to_string(lifts) + " vertical lifts"; });
            }
}

void connected_limits(const VerifyOptions& o, Tally& t) {
    std::size_t pushouts = 0, coequalizers = 0;
    for (const auto& pi : single_corpus(o)) {
        auto r = check_preserves_connected_limits(pi, o.max_size);
        pushouts += r.pushouts_checked;
        coequalizers += r.coequalizers_checked;
        t.expect(r.ok(), [&] { return "fibers " + fibers_str(pi) + ": " + r.failure.value_or(""); });
    }
    Bundle pi({2, 3});
    auto leg = dir_eval_map(pi, from_initial(FinSet(1)));
    auto glued = pushout(from_initial(FinSet(1)), from_initial(FinSet(1))).apex;
    auto lhs = dir_eval(pi, glued).set().size;
    auto rhs = pullback(leg, leg).apex.size;
    t.expect(lhs == 13 && rhs == 13, [&] {
        return "witness [2,3], 1<-0->1: " + std::to_string(lhs) + " vs " + std::to_string(rhs) + ", expected 13";
    });
    t.note(std::to_string(pushouts) + " pushouts, " + std::to_string(coequalizers) + " coequalizers");
    t.note("witness [2,3], 1<-0->1: " + std::to_string(lhs) + " = " + std::to_string(rhs));
}

void series(const VerifyOptions& o, Tally& t) {
    for (const auto& pi : single_corpus(o)) {
        auto ds = series_of(pi, SeriesKind::dirichlet);
        auto ps = series_of(pi, SeriesKind::polynomial);
        for (std::size_t x = 0; x <= 6; ++x) {
            t.expect(eval_series(ds, x) == dir_size(pi, FinSet(x)) &&
                         Natural(dir_eval(pi, FinSet(x)).set().size) == eval_series(ds, x),
                     [&] { return "dirichlet series of " + fibers_str(pi) + " at x=" + std::to_string(x); });
            t.expect(eval_series(ps, x) == poly_size(pi, FinSet(x)) &&
                         Natural(poly_eval(pi, FinSet(x)).set().size) == eval_series(ps, x),
                     [&] { return "polynomial series of " + fibers_str(pi) + " at x=" + std::to_string(x); });
        }
    }
    auto golden = render(series_of(Bundle({2, 3, 3}), SeriesKind::dirichlet));
    t.expect(golden == "2^X + 2·3^X", [&] { return "rendering of [2,3,3] was \"" + golden + "\""; });
    t.note("[2,3,3] renders \"" + golden + "\"");
}

void adjunctions(const VerifyOptions& o, Tally& t) {
    for (auto pair : {Adjunction::bangup_cod, Adjunction::cod_const, Adjunction::const_dom, Adjunction::dom_bangdown,
                      Adjunction::zc_bangup_cartesian}) {
        auto r = check_adjunction(pair, o.max_size);
        t.expect(r.holds(), [&] { return std::string(to_string(pair)) + ": " + r.counterexample->describe(); });
    }
    // Expected counterexample: the naive ZC adjunction must fail, at the
    // documented instance in particular.
    auto zc_report = check_adjunction(Adjunction::zc_bangup, o.max_size);
    t.expect(!zc_report.holds(), [] { return std::string("zc-bangup unexpectedly holds"); });
    auto inst = check_adjunction_instance(Adjunction::zc_bangup, Bundle({1}), FinSet(1), o.max_size);
    t.expect(inst.left_count == 1 && inst.right_count == 0,
             [&] { return "zc-bangup at [1], X=1 gave " + inst.describe(); });
    if (zc_report.counterexample) t.note("zc-bangup first counterexample " + zc_report.counterexample->describe());
    t.note("documented: " + inst.describe());
}

void composite(const VerifyOptions& o, Tally& t) {
    auto corpus = single_corpus(o);
    const std::size_t xmax = std::min<std::size_t>(o.max_size, 3);
    for (const auto& d : corpus) {
        std::vector<Natural> dx;
        for (std::size_t x = 0; x <= xmax; ++x) dx.push_back(dir_size(d, FinSet(x)));
        for (const auto& p : corpus) {
            auto pd = compose_poly_after_dirichlet(p, d);
            for (std::size_t x = 0; x <= xmax; ++x) {
                t.expect(dir_size(pd, FinSet(x)) == poly_size(p, FinSet(dx[x].convert_to<std::size_t>())), [&] {
                    return "p=" + fibers_str(p) + ", d=" + fibers_str(d) + ", |X|=" + std::to_string(x);
                });
            }
        }
    }
    auto small = pair_corpus(o);
    auto probes = probe_morphisms(xmax);
    for (const auto& p : small)
        for (const auto& d : small) {
            auto pd = compose_poly_after_dirichlet(p, d);
            std::vector<FinFunction> iso;
            for (std::size_t x = 0; x <= xmax; ++x) {
                iso.push_back(compose_pd_iso(p, d, FinSet(x)));
                t.expect(is_bijective(iso.back()), [&] { return "iso not bijective for p=" + fibers_str(p) + ", d=" + fibers_str(d); });
            }
            for (const auto& g : probes) {
                t.expect(compose(poly_eval_map(p, dir_eval_map(d, g)), iso[g.cod().size]) ==
                             compose(iso[g.dom().size], dir_eval_map(pd, g)),
                         [&] { return "iso not natural for p=" + fibers_str(p) + ", d=" + fibers_str(d) + ", g=" + table_str(g); });
            }
        }
    auto w = compose_poly_after_dirichlet(Bundle({2}), Bundle({2}));
    t.expect(w == Bundle({4}), [&] { return "p=[2], d=[2] gave fibers " + fibers_str(w); });
    t.note("p=[2], d=[2] gives fibers " + fibers_str(w));
}

void functor_laws(const VerifyOptions& o, Tally& t) {
    auto probes = probe_morphisms(o.max_size);
    for (const auto& pi : single_corpus(o)) {
        std::vector<FinFunction> dmap, pmap;
        for (const auto& g : probes) {
            dmap.push_back(dir_eval_map(pi, g));
            pmap.push_back(poly_eval_map(pi, g));
        }
        for (std::size_t x = 0; x <= o.max_size; ++x) {
            t.expect(dir_eval_map(pi, identity(FinSet(x))) == identity(dir_eval(pi, FinSet(x)).set()) &&
                         poly_eval_map(pi, identity(FinSet(x))) == identity(poly_eval(pi, FinSet(x)).set()),
                     [&] { return "identity law at fibers " + fibers_str(pi) + ", |X|=" + std::to_string(x); });
        }
        // Probe morphisms are grouped by domain size, so composites can be
        // located by binary search.
        for (std::size_t i = 0; i < probes.size(); ++i)
            for (std::size_t j = 0; j < probes.size(); ++j) {
                const auto& g = probes[i];
                const auto& h = probes[j];
                if (g.cod() != h.dom()) continue;
                auto hg = compose(h, g);
                auto k = static_cast<std::size_t>(std::lower_bound(probes.begin(), probes.end(), hg) - probes.begin());
                t.expect(dmap[k] == compose(dmap[i], dmap[j]) && pmap[k] == compose(pmap[j], pmap[i]), [&] {
                    return "composition law at fibers " + fibers_str(pi) + ", g=" + table_str(g) + ", h=" + table_str(h);
                });
            }
    }
}

struct Entry {
    CheckInfo info;
    void (*run)(const VerifyOptions&, Tally&);
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> all = {
        {{"presentations", "five Dirichlet presentations agree naturally"}, presentations},
        {{"equivalence", "natural families correspond to bundle maps"}, equivalence},
        {{"cartesian", "cartesian transformations are pullback squares"}, cartesian},
        {{"poly-dir", "cartesian polynomial and Dirichlet maps correspond"}, poly_dir},
        {{"factorization", "vertical/cartesian factorization"}, factorization},
        {{"connected-limits", "D sends connected colimits to limits"}, connected_limits},
        {{"series", "cardinality series evaluate to functor sizes"}, series},
        {{"adjunctions", "adjunctions hold, ZC counterexample reproduced"}, adjunctions},
        {{"composite", "P after D is a Dirichlet functor"}, composite},
        {{"functor-laws", "functor laws for both actions"}, functor_laws},
    };
    return all;
}

} // namespace

const std::vector<CheckInfo>& verify_checks() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

CheckResult run_check(std::string_view id, const VerifyOptions& options) {
    if (options.max_size < 1) fail(ErrorKind::invalid_argument, "max_size must be at least 1");
    for (const auto& e : entries()) {
        if (e.info.id != id) continue;
        Tally t;
        e.run(options, t);
        return t.finish(e.info);
    }
    fail(ErrorKind::invalid_argument, "unknown check id '" + std::string(id) + "'");
}

std::vector<CheckResult> run_all(const VerifyOptions& options) {
    std::vector<CheckResult> out;
    for (const auto& e : entries()) out.push_back(run_check(e.info.id, options));
    return out;
}

} // namespace dirichlet
