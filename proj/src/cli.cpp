#include "dirichlet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirichlet/adjunction.hpp"
#include "dirichlet/equivalence.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/functor.hpp"
#include "dirichlet/hom.hpp"
#include "dirichlet/io.hpp"
#include "dirichlet/series.hpp"
#include "dirichlet/verify.hpp"

namespace dirichlet::cli {

namespace {

using io::json;

enum class Format { text, machine };

std::string list(std::span<const std::size_t> xs) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << "]";
    return os.str();
}

std::string list(const FinFunction& f) { return list(f.table()); }
std::string list(const Bundle& pi) { return list(std::span<const std::size_t>(pi.fiber_sizes())); }

std::vector<std::size_t> vec(const FinFunction& f) { return {f.table().begin(), f.table().end()}; }

json natural_json(const Natural& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
    return n.str();
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    Format format = Format::text;

    bool machine() const { return format == Format::machine; }
    void emit(const json& j) const { out << j.dump() << "\n"; }
};

// --- subcommand options ----------------------------------------------------

struct EvalOpts {
    std::string bundle;
    std::size_t size = 0;
    std::string method = "sum";
    bool elements = false;
};

struct SeriesOpts {
    std::string bundle;
    std::string series;
    std::string kind = "dirichlet";
    std::size_t x = 0;
};

struct MapsOpts {
    std::string src;
    std::string dst;
    std::string variant = "covariant";
    bool count_only = false;
    std::size_t probe_max = 3;
};

struct CheckOpts {
    std::string property;
    std::string map;
    std::string bundle;
    std::size_t probe_max = 3;
};

struct ComposeOpts {
    std::string p;
    std::string d;
    std::size_t size = 0;
    bool has_size = false;
};

struct AdjointsOpts {
    std::string bundle;
    std::size_t set = 0;
    bool has_set = false;
};

struct AdjunctionOpts {
    std::string pair;
    std::size_t max_size = 3;
};

struct VerifyOpts {
    std::size_t max_size = 3;
    std::vector<std::string> checks;
    std::string corpus;
};

// --- commands --------------------------------------------------------------

int eval_dirichlet(const Context& c, const EvalOpts& o) {
    auto pi = io::load_bundle(o.bundle);
    auto method = parse_presentation(o.method);
    if (!method) fail(ErrorKind::validation, "--method: must be one of sum, hom, limit, pullback, slice");
    FinSet x(o.size);
    Natural size;
    std::vector<std::string> rows;
    if (*method == Presentation::sum) {
        size = dir_size(pi, x);
        if (o.elements) {
            auto set = dir_eval(pi, x);
            for (std::size_t code = 0; code < set.set().size; ++code) {
                auto el = set.decode(code);
                rows.push_back("(" + std::to_string(el.base) + ", " + list(el.fiber_datum) + ")");
            }
        }
    } else {
        auto p = dir_eval_via(*method, pi, x);
        size = p.carrier.size;
        if (o.elements) {
            auto set = dir_eval(pi, x);
            for (std::size_t i = 0; i < p.carrier.size; ++i) {
                auto el = set.decode(p.to_sum(i));
                rows.push_back("(" + std::to_string(el.base) + ", " + list(el.fiber_datum) + ")");
            }
        }
    }
    if (c.machine()) {
        json j{{"method", o.method}, {"size", natural_json(size)}};
        if (o.elements) j["elements"] = rows;
        c.emit(j);
    } else {
        c.out << size << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) c.out << i << ": " << rows[i] << "\n";
    }
    return exit_ok;
}

int eval_poly(const Context& c, const EvalOpts& o) {
    auto pi = io::load_bundle(o.bundle);
    Natural size;
    if (o.method == "sum") {
        size = poly_size(pi, FinSet(o.size));
    } else if (o.method == "composite") {
        size = poly_size_via_composite(pi, FinSet(o.size));
    } else {
        fail(ErrorKind::validation, "--method: must be one of sum, composite");
    }
    std::vector<std::string> rows;
    if (o.elements) {
        auto set = poly_eval(pi, FinSet(o.size));
        for (std::size_t code = 0; code < set.set().size; ++code) {
            auto el = set.decode(code);
            rows.push_back("(" + std::to_string(el.base) + ", " + list(el.fiber_datum) + ")");
        }
    }
    if (c.machine()) {
        json j{{"method", o.method}, {"size", natural_json(size)}};
        if (o.elements) j["elements"] = rows;
        c.emit(j);
    } else {
        c.out << size << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) c.out << i << ": " << rows[i] << "\n";
    }
    return exit_ok;
}

SeriesKind kind_of(const std::string& name) {
    auto k = parse_series_kind(name);
    if (!k) fail(ErrorKind::validation, "--kind: must be dirichlet or polynomial");
    return *k;
}

int series_cmd(const Context& c, const SeriesOpts& o) {
    auto s = series_of(io::load_bundle(o.bundle), kind_of(o.kind));
    if (c.machine()) {
        c.emit(io::to_json(s));
    } else {
        c.out << render(s) << "\n";
    }
    return exit_ok;
}

int eval_series_cmd(const Context& c, const SeriesOpts& o) {
    CardinalitySeries s;
    if (!o.series.empty()) {
        s = io::series_from_json(io::read_json_file(o.series), o.series);
    } else {
        s = series_of(io::load_bundle(o.bundle), kind_of(o.kind));
    }
    auto v = eval_series(s, o.x);
    if (c.machine()) {
        c.emit(json{{"series", render(s)}, {"x", o.x}, {"value", natural_json(v)}});
    } else {
        c.out << v << "\n";
    }
    return exit_ok;
}

int enum_maps(const Context& c, const MapsOpts& o) {
    auto src = io::load_bundle(o.src);
    auto dst = io::load_bundle(o.dst);
    json items = json::array();
    std::vector<std::string> rows;
    std::size_t count = 0;
    if (o.variant == "covariant" || o.variant == "cartesian") {
        auto maps = o.variant == "covariant" ? enumerate_covariant_maps(src, dst) : enumerate_cartesian_maps(src, dst);
        count = maps.size();
        for (const auto& m : maps) {
            items.push_back(io::to_json(m));
            rows.push_back("base " + list(m.base_map()) + " total " + list(m.total_map()));
        }
    } else if (o.variant == "contravariant") {
        auto maps = enumerate_contravariant_maps(src, dst);
        count = maps.size();
        for (const auto& m : maps) {
            items.push_back(io::to_json(m));
            std::string back = "[";
            for (std::size_t b = 0; b < m.fiber_back().size(); ++b) back += (b ? "," : "") + list(m.fiber_back()[b]);
            rows.push_back("base " + list(m.base_map()) + " back " + back + "]");
        }
    } else {
        fail(ErrorKind::validation, "--variant: must be one of covariant, contravariant, cartesian");
    }
    if (c.machine()) {
        json j{{"variant", o.variant}, {"count", count}};
        if (!o.count_only) j["maps"] = items;
        c.emit(j);
    } else {
        c.out << count << "\n";
        if (!o.count_only)
            for (const auto& r : rows) c.out << r << "\n";
    }
    return exit_ok;
}

int enum_nats(const Context& c, const MapsOpts& o) {
    auto src = io::load_bundle(o.src);
    auto dst = io::load_bundle(o.dst);
    auto fams = enumerate_natural_families(src, dst, o.probe_max);
    auto maps = count_covariant_maps(src, dst);
    bool match = Natural(fams.size()) == maps;
    if (c.machine()) {
        json carriers = json::array();
        if (!o.count_only)
            for (const auto& f : fams) carriers.push_back(io::to_json(restrict_at_bang0(f)));
        json j{{"families", fams.size()}, {"bundle_maps", natural_json(maps)}, {"probe_max", o.probe_max}};
        if (!o.count_only) j["carriers"] = carriers;
        c.emit(j);
    } else {
        c.out << fams.size() << " natural families, " << maps << " bundle maps (probe " << o.probe_max << ")\n";
        if (!o.count_only)
            for (const auto& f : fams) {
                auto m = restrict_at_bang0(f);
                c.out << "base " << list(m.base_map()) << " total " << list(m.total_map()) << "\n";
            }
    }
    if (!match) {
        c.err << "natural families and bundle maps differ in number\n";
        return exit_verification_failed;
    }
    return exit_ok;
}

int factor_cmd(const Context& c, const CheckOpts& o) {
    auto m = io::load_bundle_map(o.map);
    auto fac = factor_vertical_cartesian(m);
    if (c.machine()) {
        c.emit(json{{"vertical", io::to_json(fac.vertical)}, {"cartesian", io::to_json(fac.cartesian)}});
    } else {
        c.out << "pullback fibers " << list(fac.vertical.dst()) << "\n";
        c.out << "vertical: base " << list(fac.vertical.base_map()) << " total " << list(fac.vertical.total_map())
              << "\n";
        c.out << "cartesian: base " << list(fac.cartesian.base_map()) << " total "
              << list(fac.cartesian.total_map()) << "\n";
    }
    return exit_ok;
}

int check_cmd(const Context& c, const CheckOpts& o) {
    auto need = [](const std::string& v, const char* flag) {
        if (v.empty()) fail(ErrorKind::validation, std::string(flag) + ": required for this property");
    };
    bool passed = false;
    json j{{"property", o.property}};
    std::string line;
    if (o.property == "commutes") {
        need(o.map, "--map");
        auto raw = io::load_raw_bundle_map(o.map);
        try {
            raw.validate();
            passed = true;
            line = "commutes";
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::not_commuting) throw;
            line = std::string("does not commute: ") + e.what();
        }
    } else if (o.property == "cartesian") {
        need(o.map, "--map");
        auto r = is_cartesian_nat(NatTransform(io::load_bundle_map(o.map)), o.probe_max);
        passed = r.by_bundle;
        j["by_bundle"] = r.by_bundle;
        j["by_probe"] = r.by_probe;
        line = std::string("by_bundle ") + (r.by_bundle ? "true" : "false") + ", by_probe " +
               (r.by_probe ? "true" : "false");
        if (r.failing_square) {
            j["failing_square"] = vec(*r.failing_square);
            line += ", square at g=" + list(*r.failing_square) + ":" + std::to_string(r.failing_square->dom().size) +
                    "->" + std::to_string(r.failing_square->cod().size) + " is not a pullback";
        }
    } else if (o.property == "naturality") {
        need(o.map, "--map");
        auto r = check_naturality(NatTransform(io::load_bundle_map(o.map)), o.probe_max);
        passed = r.ok();
        j["squares_checked"] = r.squares_checked;
        line = std::to_string(r.squares_checked) + " squares checked";
        if (r.failure) line += ", failure: " + r.failure->describe();
    } else if (o.property == "connected-limits") {
        need(o.bundle, "--bundle");
        auto r = check_preserves_connected_limits(io::load_bundle(o.bundle), o.probe_max);
        passed = r.ok();
        j["pushouts_checked"] = r.pushouts_checked;
        j["coequalizers_checked"] = r.coequalizers_checked;
        line = std::to_string(r.pushouts_checked) + " pushouts, " + std::to_string(r.coequalizers_checked) +
               " coequalizers";
        if (r.failure) line += ", failure: " + *r.failure;
    } else {
        fail(ErrorKind::validation, "--property: must be one of commutes, cartesian, naturality, connected-limits");
    }
    j["passed"] = passed;
    if (c.machine()) {
        c.emit(j);
    } else {
        c.out << (passed ? "PASS " : "FAIL ") << o.property << ": " << line << "\n";
    }
    return passed ? exit_ok : exit_verification_failed;
}

int compose_pd(const Context& c, const ComposeOpts& o) {
    auto p = io::load_bundle(o.p);
    auto d = io::load_bundle(o.d);
    auto pd = compose_poly_after_dirichlet(p, d);
    json j = io::to_json(pd);
    if (o.has_size) {
        auto lhs = dir_size(pd, FinSet(o.size));
        auto rhs = poly_size(p, FinSet(to_materialized_size(dir_size(d, FinSet(o.size)), "|D(X)|")));
        j["size"] = o.size;
        j["composite"] = natural_json(lhs);
        j["poly_of_dirichlet"] = natural_json(rhs);
        if (!c.machine()) c.out << list(pd) << "\n" << lhs << " = " << rhs << "\n";
        if (c.machine()) c.emit(j);
        return lhs == rhs ? exit_ok : exit_verification_failed;
    }
    if (c.machine()) {
        c.emit(j);
    } else {
        c.out << list(pd) << "\n";
    }
    return exit_ok;
}

int adjoints(const Context& c, const AdjointsOpts& o) {
    json j;
    if (!o.bundle.empty()) {
        auto pi = io::load_bundle(o.bundle);
        auto z = zc(pi);
        j["dom"] = dom(pi).size;
        j["cod"] = cod(pi).size;
        j["zc"] = vec(z.inclusion);
        if (!c.machine()) {
            c.out << "dom " << dom(pi).size << "\n";
            c.out << "cod " << cod(pi).size << "\n";
            c.out << "zc " << list(z.inclusion) << "\n";
        }
    }
    if (o.has_set) {
        FinSet x(o.set);
        j["const"] = io::to_json(constant_bundle(x));
        j["bang_up"] = io::to_json(bang_up(x));
        j["bang_down"] = io::to_json(bang_down(x));
        if (!c.machine()) {
            c.out << "const " << list(constant_bundle(x)) << "\n";
            c.out << "bang_up " << list(bang_up(x)) << "\n";
            c.out << "bang_down " << list(bang_down(x)) << "\n";
        }
    }
    if (o.bundle.empty() && !o.has_set) fail(ErrorKind::validation, "adjoints: give --bundle and/or --set");
    if (c.machine()) c.emit(j);
    return exit_ok;
}

int adjunction_check(const Context& c, const AdjunctionOpts& o) {
    auto pair = parse_adjunction(o.pair);
    if (!pair) {
        std::string names;
        for (auto a : all_adjunctions) names += (names.empty() ? "" : ", ") + std::string(to_string(a));
        fail(ErrorKind::validation, "--pair: must be one of " + names);
    }
    auto r = check_adjunction(*pair, o.max_size);
    if (c.machine()) {
        json j{{"pair", o.pair}, {"max_size", o.max_size}, {"instances", r.instances.size()}, {"holds", r.holds()}};
        if (r.counterexample) j["counterexample"] = r.counterexample->describe();
        c.emit(j);
    } else {
        c.out << o.pair << ": " << r.instances.size() << " instances, " << (r.holds() ? "holds" : "fails") << "\n";
        if (r.counterexample) c.out << "counterexample: " << r.counterexample->describe() << "\n";
    }
    return r.holds() ? exit_ok : exit_verification_failed;
}

int verify_cmd(const Context& c, const VerifyOpts& o) {
    VerifyOptions options;
    options.max_size = o.max_size;
    if (!o.corpus.empty()) {
        std::vector<std::filesystem::path> files;
        std::error_code ec;
        for (const auto& entry : std::filesystem::directory_iterator(o.corpus, ec)) {
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        }
        if (ec) fail(ErrorKind::validation, o.corpus + ": cannot read corpus directory");
        std::sort(files.begin(), files.end());
        for (const auto& f : files) options.extra_bundles.push_back(io::load_bundle(f));
    }
    std::vector<CheckResult> results;
    if (o.checks.empty()) {
        results = run_all(options);
    } else {
        for (const auto& id : o.checks) {
            bool known = std::any_of(verify_checks().begin(), verify_checks().end(),
                                     [&](const CheckInfo& info) { return info.id == id; });
            if (!known) fail(ErrorKind::validation, "--check: unknown check id '" + id + "'");
        }
        for (const auto& info : verify_checks()) {
            if (std::find(o.checks.begin(), o.checks.end(), info.id) != o.checks.end()) {
                results.push_back(run_check(info.id, options));
            }
        }
    }
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (c.machine()) {
            arr.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        } else {
            c.out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.title << " (" << r.detail << ")\n";
        }
    }
    if (c.machine()) {
        c.emit(json{{"max_size", o.max_size}, {"passed", all}, {"checks", arr}});
    } else {
        c.out << (all ? "all checks passed" : "verification failed") << "\n";
    }
    return all ? exit_ok : exit_verification_failed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bundles, polynomial and Dirichlet functors over finite sets"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    std::size_t cap = 1'000'000;
    std::string format = "text";
    app.add_option("--cap", cap, "Enumeration cap (candidate tuples)")
        ->envname("DIRICHLET_ENUM_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));

    EvalOpts dir_o, poly_o;
    auto* ed = app.add_subcommand("eval-dirichlet", "Size (and elements) of D(X)");
    ed->add_option("--bundle", dir_o.bundle, "Bundle JSON file")->required();
    ed->add_option("--size", dir_o.size, "|X|")->required();
    ed->add_option("--method", dir_o.method, "sum|hom|limit|pullback|slice");
    ed->add_flag("--elements", dir_o.elements, "List elements as (b, h)");

    auto* ep = app.add_subcommand("eval-poly", "Size (and elements) of P(X)");
    ep->add_option("--bundle", poly_o.bundle, "Bundle JSON file")->required();
    ep->add_option("--size", poly_o.size, "|X|")->required();
    ep->add_option("--method", poly_o.method, "sum|composite");
    ep->add_flag("--elements", poly_o.elements, "List elements as (b, t)");

    SeriesOpts ser_o, evs_o;
    auto* se = app.add_subcommand("series", "Render the cardinality series of a bundle");
    se->add_option("--bundle", ser_o.bundle, "Bundle JSON file")->required();
    se->add_option("--kind", ser_o.kind, "dirichlet|polynomial");

    auto* es = app.add_subcommand("eval-series", "Evaluate a cardinality series at |X| = x");
    auto* es_bundle = es->add_option("--bundle", evs_o.bundle, "Bundle JSON file");
    auto* es_series = es->add_option("--series", evs_o.series, "Series JSON file");
    es_bundle->excludes(es_series);
    es->add_option("--kind", evs_o.kind, "dirichlet|polynomial (with --bundle)");
    es->add_option("--x", evs_o.x, "|X|")->required();

    MapsOpts maps_o, nats_o;
    auto* em = app.add_subcommand("enum-maps", "Enumerate bundle maps");
    em->add_option("--src", maps_o.src, "Source bundle")->required();
    em->add_option("--dst", maps_o.dst, "Target bundle")->required();
    em->add_option("--variant", maps_o.variant, "covariant|contravariant|cartesian");
    em->add_flag("--count-only", maps_o.count_only, "Print only the count");

    auto* en = app.add_subcommand("enum-nats", "Enumerate natural families over the probe category");
    en->add_option("--src", nats_o.src, "Source bundle")->required();
    en->add_option("--dst", nats_o.dst, "Target bundle")->required();
    en->add_option("--probe-max", nats_o.probe_max, "Largest probe set")->check(CLI::PositiveNumber);
    en->add_flag("--count-only", nats_o.count_only, "Print only the counts");

    CheckOpts fac_o, chk_o;
    auto* fa = app.add_subcommand("factor", "Vertical/cartesian factorization of a bundle map");
    fa->add_option("--map", fac_o.map, "Bundle map JSON file")->required();

    auto* ch = app.add_subcommand("check", "Check a property of a map or bundle");
    ch->add_option("--property", chk_o.property, "commutes|cartesian|naturality|connected-limits")->required();
    ch->add_option("--map", chk_o.map, "Bundle map JSON file");
    ch->add_option("--bundle", chk_o.bundle, "Bundle JSON file");
    ch->add_option("--probe-max", chk_o.probe_max, "Largest probe set")->check(CLI::PositiveNumber);

    ComposeOpts cpd_o;
    auto* cp = app.add_subcommand("compose-pd", "Bundle of the composite P after D");
    cp->add_option("--p", cpd_o.p, "Polynomial bundle")->required();
    cp->add_option("--d", cpd_o.d, "Dirichlet bundle")->required();
    auto* cp_size = cp->add_option("--size", cpd_o.size, "Also compare cardinalities at |X|");

    AdjointsOpts adj_o;
    auto* ad = app.add_subcommand("adjoints", "dom, cod, ZC of a bundle; const, bang_up, bang_down of a set");
    ad->add_option("--bundle", adj_o.bundle, "Bundle JSON file");
    auto* ad_set = ad->add_option("--set", adj_o.set, "|X|");

    AdjunctionOpts ac_o;
    auto* ac = app.add_subcommand("adjunction-check", "Exhaustively check one adjunction");
    ac->add_option("--pair", ac_o.pair, "bangup-cod|cod-const|const-dom|dom-bangdown|zc-bangup|zc-bangup-cartesian")
        ->required();
    ac->add_option("--max-size", ac_o.max_size, "Size bound")->check(CLI::PositiveNumber);

    VerifyOpts ver_o;
    auto* ve = app.add_subcommand("verify", "Run the verification suite");
    ve->add_option("--max-size", ver_o.max_size, "Size bound")->check(CLI::PositiveNumber);
    ve->add_option("--check", ver_o.checks, "Check id (repeatable)");
    ve->add_option("--corpus", ver_o.corpus, "Directory of extra bundle JSON files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    Context ctx{out, err, format == "machine" ? Format::machine : Format::text};
    cpd_o.has_size = cp_size->count() > 0;
    adj_o.has_set = ad_set->count() > 0;

    try {
        ScopedEnumerationCap scoped(cap);
        if (ed->parsed()) return eval_dirichlet(ctx, dir_o);
        if (ep->parsed()) return eval_poly(ctx, poly_o);
        if (se->parsed()) return series_cmd(ctx, ser_o);
        if (es->parsed()) {
            if (evs_o.bundle.empty() && evs_o.series.empty()) {
                fail(ErrorKind::validation, "eval-series: give --bundle or --series");
            }
            return eval_series_cmd(ctx, evs_o);
        }
        if (em->parsed()) return enum_maps(ctx, maps_o);
        if (en->parsed()) return enum_nats(ctx, nats_o);
        if (fa->parsed()) return factor_cmd(ctx, fac_o);
        if (ch->parsed()) return check_cmd(ctx, chk_o);
        if (cp->parsed()) return compose_pd(ctx, cpd_o);
        if (ad->parsed()) return adjoints(ctx, adj_o);
        if (ac->parsed()) return adjunction_check(ctx, ac_o);
        if (ve->parsed()) return verify_cmd(ctx, ver_o);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::enumeration_cap_exceeded ? exit_cap_exceeded : exit_input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_verification_failed;
    }
    return exit_input_error;
}

} // namespace dirichlet::cli
