#include "dirichlet/adjunction.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "dirichlet/error.hpp"
#include "dirichlet/hom.hpp"

namespace dirichlet {

std::string_view to_string(Adjunction a) {
    switch (a) {
    case Adjunction::bangup_cod: return "bangup-cod";
    case Adjunction::cod_const: return "cod-const";
    case Adjunction::const_dom: return "const-dom";
    case Adjunction::dom_bangdown: return "dom-bangdown";
    case Adjunction::zc_bangup: return "zc-bangup";
    case Adjunction::zc_bangup_cartesian: return "zc-bangup-cartesian";
    }
    return "?";
}

std::optional<Adjunction> parse_adjunction(std::string_view name) {
    for (auto a : all_adjunctions) {
        if (to_string(a) == name) return a;
    }
    return std::nullopt;
}

std::string AdjunctionInstance::describe() const {
    std::ostringstream os;
    os << "fibers [";
    for (std::size_t b = 0; b < bundle.base().size; ++b) os << (b ? "," : "") << bundle.fiber_size(b);
    os << "], X=" << set_size << ": left " << left_count << ", right " << right_count
       << (bijective ? ", bijective" : ", not bijective") << (natural ? ", natural" : ", not natural");
    return os.str();
}

namespace {

// The comparison map φ sends each bundle map to a function; it is a bijection
// onto the Set-side hom-set iff it is injective and the counts agree.
bool comparison_bijective(const std::vector<BundleMap>& maps, const std::function<FinFunction(const BundleMap&)>& phi,
                          const Natural& set_side_count) {
    std::set<FinFunction> image;
    for (const auto& m : maps) image.insert(phi(m));
    return image.size() == maps.size() && Natural(maps.size()) == set_side_count;
}

std::vector<FinFunction> probes_into(FinSet x, std::size_t probe_max) {
    std::vector<FinFunction> out;
    for (std::size_t a = 0; a <= probe_max; ++a) {
        auto fs = all_functions(FinSet(a), x);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

std::vector<FinFunction> probes_out_of(FinSet x, std::size_t probe_max) {
    std::vector<FinFunction> out;
    for (std::size_t a = 0; a <= probe_max; ++a) {
        auto fs = all_functions(x, FinSet(a));
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

} // namespace

AdjunctionInstance check_adjunction_instance(Adjunction pair, const Bundle& pi, FinSet x, std::size_t probe_max) {
    AdjunctionInstance inst{pi, x.size, 0, 0, false, true};
    auto hom_count = [](FinSet a, FinSet b) { return count_functions(a, b); };

    switch (pair) {
    case Adjunction::bangup_cod: {
        // Hom↓(!^X, π) ≅ Hom(X, B), m ↦ base map; natural in X by precomposition.
        auto maps = enumerate_covariant_maps(bang_up(x), pi);
        auto phi = [](const BundleMap& m) { return m.base_map(); };
        inst.left_count = maps.size();
        inst.right_count = hom_count(x, pi.base());
        inst.bijective = comparison_bijective(maps, phi, inst.right_count);
        for (const auto& g : probes_into(x, probe_max)) {
            for (const auto& m : maps) {
                if (phi(compose_maps(m, bang_up_map(g))) != compose(phi(m), g)) inst.natural = false;
            }
        }
        break;
    }
    case Adjunction::cod_const: {
        // Hom(B, Y) ≅ Hom↓(π, id_Y), m ↦ base map; natural in Y by postcomposition.
        auto maps = enumerate_covariant_maps(pi, constant_bundle(x));
        auto phi = [](const BundleMap& m) { return m.base_map(); };
        inst.left_count = hom_count(pi.base(), x);
        inst.right_count = maps.size();
        inst.bijective = comparison_bijective(maps, phi, inst.left_count);
        for (const auto& h : probes_out_of(x, probe_max)) {
            for (const auto& m : maps) {
                if (phi(compose_maps(constant_map(h), m)) != compose(h, phi(m))) inst.natural = false;
            }
        }
        break;
    }
    case Adjunction::const_dom: {
        // Hom↓(id_X, π) ≅ Hom(X, E), m ↦ total map.
        auto maps = enumerate_covariant_maps(constant_bundle(x), pi);
        auto phi = [](const BundleMap& m) { return m.total_map(); };
        inst.left_count = maps.size();
        inst.right_count = hom_count(x, pi.total());
        inst.bijective = comparison_bijective(maps, phi, inst.right_count);
        for (const auto& g : probes_into(x, probe_max)) {
            for (const auto& m : maps) {
                if (phi(compose_maps(m, constant_map(g))) != compose(phi(m), g)) inst.natural = false;
            }
        }
        break;
    }
    case Adjunction::dom_bangdown: {
        // Hom(E, X) ≅ Hom↓(π, !_X), m ↦ total map.
        auto maps = enumerate_covariant_maps(pi, bang_down(x));
        auto phi = [](const BundleMap& m) { return m.total_map(); };
        inst.left_count = hom_count(pi.total(), x);
        inst.right_count = maps.size();
        inst.bijective = comparison_bijective(maps, phi, inst.left_count);
        for (const auto& h : probes_out_of(x, probe_max)) {
            for (const auto& m : maps) {
                if (phi(compose_maps(bang_down_map(h), m)) != compose(h, phi(m))) inst.natural = false;
            }
        }
        break;
    }
    case Adjunction::zc_bangup: {
        // Candidate Hom(ZC π, X) ≅ Hom↓(π, !^X), m ↦ base map restricted to ZC.
        auto locus = zc(pi);
        auto maps = enumerate_covariant_maps(pi, bang_up(x));
        auto phi = [&](const BundleMap& m) { return compose(m.base_map(), locus.inclusion); };
        inst.left_count = hom_count(locus.subset, x);
        inst.right_count = maps.size();
        inst.bijective = comparison_bijective(maps, phi, inst.left_count);
        for (const auto& h : probes_out_of(x, probe_max)) {
            for (const auto& m : maps) {
                if (phi(compose_maps(bang_up_map(h), m)) != compose(h, phi(m))) inst.natural = false;
            }
        }
        break;
    }
    case Adjunction::zc_bangup_cartesian: {
        // Hom_cart(!^X, π) ≅ Hom(X, ZC π): a cartesian square out of 0 → X
        // must land in the empty fibers.
        auto locus = zc(pi);
        std::vector<std::size_t> position(pi.base().size, npos);
        for (std::size_t k = 0; k < locus.subset.size; ++k) position[locus.inclusion(k)] = k;
        auto maps = enumerate_cartesian_maps(bang_up(x), pi);
        auto phi = [&](const BundleMap& m) {
            std::vector<std::size_t> t;
            for (auto b : m.base_map().table()) t.push_back(position[b]);
            return FinFunction(m.base_map().dom(), locus.subset, std::move(t));
        };
        inst.left_count = maps.size();
        inst.right_count = hom_count(x, locus.subset);
        inst.bijective = comparison_bijective(maps, phi, inst.right_count);
        for (const auto& g : probes_into(x, probe_max)) {
            for (const auto& m : maps) {
                if (phi(compose_maps(m, bang_up_map(g))) != compose(phi(m), g)) inst.natural = false;
            }
        }
        break;
    }
    }
    return inst;
}

AdjunctionReport check_adjunction(Adjunction pair, std::size_t max_size) {
    if (max_size < 1) fail(ErrorKind::invalid_argument, "max_size must be at least 1");
    AdjunctionReport report{pair, max_size, {}, std::nullopt};
    for (const auto& pi : enumerate_bundles(max_size, max_size)) {
        for (std::size_t x = 0; x <= max_size; ++x) {
            auto inst = check_adjunction_instance(pair, pi, FinSet(x), max_size);
            if (!inst.holds() && !report.counterexample) report.counterexample = inst;
            report.instances.push_back(std::move(inst));
        }
    }
    return report;
}

} // namespace dirichlet
