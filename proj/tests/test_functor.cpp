#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dirichlet/equivalence.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/functor.hpp"
#include "dirichlet/hom.hpp"
#include "oracle.hpp"

using namespace dirichlet;

namespace {

FinFunction fn(std::vector<std::size_t> t, std::size_t cod) { return FinFunction(std::move(t), FinSet(cod)); }

std::vector<std::size_t> table_of(const FinFunction& f) { return {f.table().begin(), f.table().end()}; }

/// (b, h) pairs of D(X) in rank order, built without the library's codec.
std::vector<std::pair<std::size_t, oracle::Table>> dirichlet_elements(const oracle::Table& fibers, std::size_t x) {
    std::vector<std::pair<std::size_t, oracle::Table>> out;
    for (std::size_t b = 0; b < fibers.size(); ++b)
        oracle::tables(x, fibers[b], [&](const oracle::Table& h) { out.emplace_back(b, h); });
    return out;
}

} // namespace

TEST_CASE("dir_eval sizes", "[functor]") {
    CHECK(oracle::dirichlet_count({2, 3}, 2) == 13);
    CHECK(dir_eval(Bundle({2, 3}), FinSet(2)).set().size == 13);
    for (const auto& pi : enumerate_bundles(3, 3)) {
        CHECK(dir_size(pi, FinSet(0)) == pi.base().size);
        CHECK(dir_size(pi, FinSet(1)) == pi.total().size);
        for (std::size_t x = 0; x <= 3; ++x) REQUIRE(dir_size(pi, FinSet(x)) == oracle::dirichlet_count(pi.fiber_sizes(), x));
    }
    CHECK(dir_size(Bundle({2}), FinSet(200)) == power(Natural(2), 200));
}

TEST_CASE("DirichletSet codes are lexicographic ranks", "[functor][property]") {
    for (const auto& pi : enumerate_bundles(2, 3))
        for (std::size_t x = 0; x <= 3; ++x) {
            auto set = dir_eval(pi, FinSet(x));
            auto expected = dirichlet_elements(pi.fiber_sizes(), x);
            REQUIRE(set.set().size == expected.size());
            for (std::size_t code = 0; code < expected.size(); ++code) {
                auto el = set.decode(code);
                REQUIRE(el.base == expected[code].first);
                REQUIRE(el.fiber_datum == expected[code].second);
                REQUIRE(set.encode(el) == code);
            }
        }
}

TEST_CASE("dir_eval_map examples", "[functor]") {
    Bundle pi({2, 3});
    CHECK(dir_eval_map(pi, identity(FinSet(2))) == identity(dir_eval(pi, FinSet(2)).set()));
    auto forget = dir_eval_map(pi, from_initial(FinSet(2)));
    auto set = dir_eval(pi, FinSet(2));
    for (std::size_t c = 0; c < set.set().size; ++c) CHECK(forget(c) == set.decode(c).base);

    CHECK(table_of(dir_eval_map(Bundle({2}), constant(FinSet(1), FinSet(2), 0))) == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("poly_eval", "[functor]") {
    CHECK(oracle::poly_count({2, 3}, 2) == 12);
    CHECK(poly_eval(Bundle({2, 3}), FinSet(2)).set().size == 12);
    for (const auto& pi : enumerate_bundles(3, 3)) {
        CHECK(poly_size(pi, FinSet(1)) == pi.base().size);
        for (std::size_t x = 0; x <= 3; ++x) {
            REQUIRE(poly_size(pi, FinSet(x)) == oracle::poly_count(pi.fiber_sizes(), x));
            REQUIRE(poly_size_via_composite(pi, FinSet(x)) == oracle::poly_count(pi.fiber_sizes(), x));
        }
    }
    CHECK(poly_eval_map(Bundle({2, 3}), identity(FinSet(2))) == identity(FinSet(12)));
}

TEST_CASE("functor laws on sets <= 3", "[functor][property]") {
    auto probes = probe_morphisms(3);
    for (const auto& pi : enumerate_bundles(2, 2)) {
        for (std::size_t x = 0; x <= 3; ++x) {
            REQUIRE(dir_eval_map(pi, identity(FinSet(x))) == identity(dir_eval(pi, FinSet(x)).set()));
            REQUIRE(poly_eval_map(pi, identity(FinSet(x))) == identity(poly_eval(pi, FinSet(x)).set()));
        }
        for (const auto& g : probes)
            for (const auto& h : probes) {
                if (g.cod() != h.dom()) continue;
                auto hg = compose(h, g);
                REQUIRE(dir_eval_map(pi, hg) == compose(dir_eval_map(pi, g), dir_eval_map(pi, h)));
                REQUIRE(poly_eval_map(pi, hg) == compose(poly_eval_map(pi, h), poly_eval_map(pi, g)));
            }
    }
}

TEST_CASE("presentations at fibers [2,3], |X| = 2", "[functor]") {
    Bundle pi({2, 3});
    for (auto method : all_presentations) {
        auto p = dir_eval_via(method, pi, FinSet(2));
        CHECK(p.carrier.size == 13);
        CHECK(is_bijective(p.to_sum));
    }
    auto cone = left_cone_diagram(pi, FinSet(2));
    CHECK(cone.objects.size() == 3);
    CHECK(limit_of_quiver(cone).apex.size == 13);
    CHECK(enumerate_covariant_maps(bang_down(FinSet(2)), pi).size() == 13);
}

TEST_CASE("presentations agree and their bijections are natural", "[functor][property]") {
    auto probes = probe_morphisms(2);
    for (const auto& pi : enumerate_bundles(2, 2))
        for (auto method : all_presentations) {
            for (std::size_t x = 0; x <= 2; ++x) {
                auto p = dir_eval_via(method, pi, FinSet(x));
                REQUIRE(p.method == method);
                REQUIRE(p.carrier.size == oracle::dirichlet_count(pi.fiber_sizes(), x));
                REQUIRE(is_bijective(p.to_sum));
            }
            for (const auto& g : probes) {
                auto from = dir_eval_via(method, pi, g.cod());
                auto to = dir_eval_via(method, pi, g.dom());
                REQUIRE(compose(to.to_sum, dir_eval_via_map(method, pi, g)) ==
                        compose(dir_eval_map(pi, g), from.to_sum));
            }
        }
}

TEST_CASE("presentation names round trip", "[functor]") {
    for (auto m : all_presentations) CHECK(parse_presentation(to_string(m)) == m);
    CHECK_FALSE(parse_presentation("kan").has_value());
}

TEST_CASE("nat_component", "[functor]") {
    Bundle pi({2, 3});
    NatTransform id(identity_map(pi));
    for (std::size_t x = 0; x <= 4; ++x) CHECK(nat_component(id, FinSet(x)) == identity(dir_eval(pi, FinSet(x)).set()));

    auto incl = bundle_map_from_fibers(Bundle({2}), Bundle({1, 3}), fn({1}, 2), {{0, 1}});
    NatTransform t(incl);
    CHECK(nat_component(t, FinSet(0)) == incl.base_map());
    CHECK(nat_component(t, FinSet(1)) == incl.total_map());

    auto c2 = nat_component(t, FinSet(2));
    CHECK(c2.dom().size == 4);
    CHECK(c2.cod().size == 10);
    std::set<std::size_t> image(c2.table().begin(), c2.table().end());
    CHECK(image.size() == 4);
    for (auto v : image) CHECK((v >= 1 && v < 10));
    // (0, [h0, h1]) ↦ (1, [h0, h1]) with fiber inclusion 0↦0, 1↦1.
    CHECK(table_of(c2) == std::vector<std::size_t>{1, 2, 4, 5});
}

TEST_CASE("nat_component at !0 recovers the carrier", "[functor][property]") {
    auto corpus = enumerate_bundles(2, 2);
    for (const auto& s : corpus)
        for (const auto& d : corpus)
            for (const auto& m : enumerate_covariant_maps(s, d)) {
                NatTransform t(m);
                REQUIRE(nat_component(t, FinSet(1)) == m.total_map());
                REQUIRE(nat_component(t, FinSet(0)) == m.base_map());
            }
}

TEST_CASE("check_naturality", "[functor]") {
    auto incl = bundle_map_from_fibers(Bundle({2}), Bundle({1, 3}), fn({1}, 2), {{0, 1}});
    CHECK(check_naturality(NatTransform(incl), 3).ok());
    CHECK(check_naturality(NatTransform(identity_map(Bundle({2, 3}))), 3).ok());

    auto family = extend_from_bang0(incl, 2);
    auto bad = table_of(family.components[2]);
    std::swap(bad[0], bad[3]);
    family.components[2] = FinFunction(family.components[2].dom(), family.components[2].cod(), bad);
    auto report = check_naturality(family);
    REQUIRE_FALSE(report.ok());
    CHECK(report.squares_checked > 0);
    CHECK_FALSE(report.failure->describe().empty());
}

TEST_CASE("every bundle map is natural", "[functor][property]") {
    auto corpus = enumerate_bundles(2, 2);
    for (const auto& s : corpus)
        for (const auto& d : corpus)
            for (const auto& m : enumerate_covariant_maps(s, d)) REQUIRE(check_naturality(NatTransform(m), 2).ok());
}

TEST_CASE("is_cartesian_nat examples", "[functor]") {
    auto id = is_cartesian_nat(NatTransform(identity_map(Bundle({2, 3}))), 3);
    CHECK(id.by_bundle);
    CHECK(id.by_probe);

    auto incl = bundle_map_from_fibers(Bundle({2}), Bundle({1, 3}), fn({1}, 2), {{0, 1}});
    auto r = is_cartesian_nat(NatTransform(incl), 3);
    CHECK_FALSE(r.by_bundle);
    CHECK_FALSE(r.by_probe);
    REQUIRE(r.failing_square.has_value());
    CHECK(*r.failing_square == from_initial(FinSet(1)));

    auto bij = bundle_map_from_fibers(Bundle({3}), Bundle({1, 3}), fn({1}, 2), {{1, 2, 0}});
    auto rb = is_cartesian_nat(NatTransform(bij), 3);
    CHECK(rb.by_bundle);
    CHECK(rb.by_probe);
}

TEST_CASE("cartesian by bundle agrees with cartesian by probe", "[functor][property]") {
    auto corpus = enumerate_bundles(2, 2);
    for (const auto& s : corpus)
        for (const auto& d : corpus)
            for (const auto& m : enumerate_covariant_maps(s, d)) {
                auto r = is_cartesian_nat(NatTransform(m), 2);
                REQUIRE(r.by_bundle == r.by_probe);
                REQUIRE(r.by_bundle == is_cartesian(m));
            }
}

TEST_CASE("connected limits", "[functor]") {
    Bundle pi({2, 3});
    auto leg = dir_eval_map(pi, from_initial(FinSet(1)));
    CHECK(pullback(leg, leg).apex.size == 13);
    CHECK(dir_eval(pi, pushout(from_initial(FinSet(1)), from_initial(FinSet(1))).apex).set().size == 13);

    auto report = check_preserves_connected_limits(pi, 2);
    CHECK(report.ok());
    CHECK(report.pushouts_checked > 0);
    CHECK(report.coequalizers_checked > 0);

    CHECK(check_preserves_connected_limits(Bundle({1}), 3).ok());
    for (std::size_t x = 0; x <= 3; ++x) CHECK(dir_size(Bundle({1}), FinSet(x)) == 1);
}

TEST_CASE("coequalizer of the two points 1 => 2", "[functor]") {
    Bundle pi({2, 3});
    auto f = fn({0}, 2), g = fn({1}, 2);
    auto co = coequalizer(f, g);
    auto eq = equalizer(dir_eval_map(pi, f), dir_eval_map(pi, g));
    auto cmp = dir_eval_map(pi, co.q);
    CHECK(eq.apex.size == dir_eval(pi, co.apex).set().size);
    // D(q) lands in the equalizer and hits every element of it.
    std::set<std::size_t> hit(cmp.table().begin(), cmp.table().end());
    std::set<std::size_t> want(eq.inclusion.table().begin(), eq.inclusion.table().end());
    CHECK(hit == want);
}

TEST_CASE("connected limits preserved for every bundle with sizes <= 2", "[functor][property]") {
    for (const auto& pi : enumerate_bundles(2, 2)) REQUIRE(check_preserves_connected_limits(pi, 2).ok());
}

TEST_CASE("compose_poly_after_dirichlet", "[functor]") {
    CHECK(compose_poly_after_dirichlet(Bundle({1}), Bundle({2})) == Bundle({2}));
    CHECK(compose_poly_after_dirichlet(Bundle({2}), Bundle({2})) == Bundle({4}));
    CHECK(compose_poly_after_dirichlet(Bundle({0}), Bundle({3, 1})) == Bundle({1}));
    for (std::size_t x = 0; x <= 3; ++x)
        CHECK(dir_size(Bundle({4}), FinSet(x)) == oracle::poly_count({2}, oracle::dirichlet_count({2}, x)));
}

TEST_CASE("P after D: cardinality and natural isomorphism", "[functor][property]") {
    auto corpus = enumerate_bundles(2, 2);
    auto probes = probe_morphisms(2);
    for (const auto& p : corpus)
        for (const auto& d : corpus) {
            auto pd = compose_poly_after_dirichlet(p, d);
            for (std::size_t x = 0; x <= 3; ++x) {
                auto dx = oracle::dirichlet_count(d.fiber_sizes(), x);
                REQUIRE(dir_size(pd, FinSet(x)) == oracle::poly_count(p.fiber_sizes(), dx));
            }
            for (const auto& g : probes) {
                auto lhs = compose(poly_eval_map(p, dir_eval_map(d, g)), compose_pd_iso(p, d, g.cod()));
                auto rhs = compose(compose_pd_iso(p, d, g.dom()), dir_eval_map(pd, g));
                REQUIRE(lhs == rhs);
            }
        }
}

TEST_CASE("poly_nat_component is natural", "[functor][property]") {
    auto corpus = enumerate_bundles(2, 2);
    auto probes = probe_morphisms(2);
    for (const auto& s : corpus)
        for (const auto& d : corpus)
            for (const auto& m : enumerate_contravariant_maps(s, d))
                for (const auto& g : probes) {
                    auto lhs = compose(poly_eval_map(d, g), poly_nat_component(m, g.dom()));
                    auto rhs = compose(poly_nat_component(m, g.cod()), poly_eval_map(s, g));
                    REQUIRE(lhs == rhs);
                }
}

TEST_CASE("enumeration cap", "[functor]") {
    ScopedEnumerationCap cap(10);
    try {
        dir_eval_via(Presentation::limit, Bundle({3, 3}), FinSet(3));
        FAIL("expected the cap to trip");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::enumeration_cap_exceeded);
    }
    // Sizes are exact and never capped.
    CHECK(dir_size(Bundle({3, 3}), FinSet(3)) == 54);
}
