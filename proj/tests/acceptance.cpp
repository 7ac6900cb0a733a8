// Acceptance suite: one line per criterion. Each criterion combines the
// exhaustive library check with witness values recomputed by the brute-force
// oracle.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "dirichlet/adjunction.hpp"
#include "dirichlet/equivalence.hpp"
#include "dirichlet/functor.hpp"
#include "dirichlet/series.hpp"
#include "dirichlet/verify.hpp"
#include "oracle.hpp"

using namespace dirichlet;

namespace {

struct Witness {
    std::string label;
    bool ok;
};

struct Criterion {
    int number;
    std::string check_id;
    std::function<std::vector<Witness>()> witnesses;
};

std::vector<Witness> none() { return {}; }

std::vector<Witness> equivalence_witness() {
    auto oracle_maps = oracle::covariant_map_count({2}, {1, 3});
    auto fams = enumerate_natural_families(Bundle({2}), Bundle({1, 3}), 3).size();
    return {{"[2] vs [1,3]: " + std::to_string(fams) + " families, " + std::to_string(oracle_maps) + " squares",
             fams == 10 && oracle_maps == 10}};
}

std::vector<Witness> poly_dir_witness() {
    auto e = poly_dir_cartesian_equiv(Bundle({3}), Bundle({3}));
    auto brute = oracle::cartesian_map_count({3}, {3});
    return {{"n=3: " + std::to_string(e.dir_side.size()) + " and " + std::to_string(e.poly_side.size()) +
                 " maps, brute force " + std::to_string(brute),
             e.dir_side.size() == 6 && e.poly_side.size() == 6 && brute == 6}};
}

std::vector<Witness> connected_witness() {
    Bundle pi({2, 3});
    auto leg = dir_eval_map(pi, from_initial(FinSet(1)));
    auto pb = pullback(leg, leg).apex.size;
    auto brute = oracle::dirichlet_count({2, 3}, 2);
    return {{"[2,3], 1<-0->1: " + std::to_string(brute) + " = " + std::to_string(pb), brute == 13 && pb == 13}};
}

std::vector<Witness> series_witness() {
    auto s = render(series_of(Bundle({2, 3, 3}), SeriesKind::dirichlet));
    return {{"[2,3,3] renders \"" + s + "\"", s == "2^X + 2·3^X"}};
}

std::vector<Witness> adjunction_witness() {
    auto inst = check_adjunction_instance(Adjunction::zc_bangup, Bundle({1}), FinSet(1), 1);
    // |Hom(ZC, 1)| with ZC empty, and squares from [1] into 0 -> 1.
    auto left = oracle::ipow(1, 0);
    auto right = oracle::covariant_map_count({1}, {0});
    return {{"ZC at [1], X=1: " + std::to_string(left) + " vs " + std::to_string(right),
             left == 1 && right == 0 && inst.left_count == 1 && inst.right_count == 0 && !inst.holds()}};
}

std::vector<Witness> composite_witness() {
    auto pd = compose_poly_after_dirichlet(Bundle({2}), Bundle({2}));
    bool sizes = true;
    for (std::size_t x = 0; x <= 3; ++x)
        sizes = sizes && oracle::dirichlet_count({4}, x) == oracle::poly_count({2}, oracle::dirichlet_count({2}, x));
    return {{"p=[2], d=[2] gives 4^X", pd == Bundle({4}) && sizes}};
}

} // namespace

int main() {
    VerifyOptions options;
    options.max_size = 3;

    const std::vector<Criterion> criteria = {
        {1, "presentations", none},
        {2, "equivalence", equivalence_witness},
        {3, "cartesian", none},
        {4, "poly-dir", poly_dir_witness},
        {5, "factorization", none},
        {6, "connected-limits", connected_witness},
        {7, "series", series_witness},
        {8, "adjunctions", adjunction_witness},
        {9, "composite", composite_witness},
        {10, "functor-laws", none},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            auto r = run_check(c.check_id, options);
            ok = r.passed;
            detail = r.detail;
            for (const auto& w : c.witnesses()) {
                ok = ok && w.ok;
                detail += "; oracle " + w.label + (w.ok ? "" : " [wrong]");
            }
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.number << " (" << c.check_id << "): " << detail
                  << " [" << ms.count() << " ms]" << std::endl;
        failed += !ok;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
