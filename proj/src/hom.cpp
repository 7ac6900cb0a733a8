#include "dirichlet/hom.hpp"

#include <functional>
#include <numeric>

#include "dirichlet/error.hpp"

namespace dirichlet {

namespace {

template <class Exponent>
Natural sum_over_base_maps(const Bundle& src, const Bundle& dst, Exponent term) {
    Natural total = 0;
    for_each_table(src.base().size, dst.base().size, [&](std::span<const std::size_t> f) {
        Natural prod = 1;
        for (std::size_t b = 0; b < f.size() && prod != 0; ++b) prod *= term(b, f[b]);
        total += prod;
    });
    return total;
}

// Odometer over a list of independent digit positions, each with its own radix,
// most significant first. Calls visit for every assignment.
void for_each_digits(const std::vector<std::size_t>& radices,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
    for (auto r : radices) {
        if (r == 0) return;
    }
    std::vector<std::size_t> digits(radices.size(), 0);
    while (true) {
        visit(digits);
        std::size_t i = digits.size();
        while (i > 0) {
            --i;
            if (++digits[i] < radices[i]) break;
            digits[i] = 0;
            if (i == 0) return;
        }
        if (digits.empty()) return;
    }
}

} // namespace

Natural count_covariant_maps(const Bundle& src, const Bundle& dst) {
    return sum_over_base_maps(src, dst, [&](std::size_t b, std::size_t fb) {
        return power(Natural(dst.fiber_size(fb)), src.fiber_size(b));
    });
}

Natural count_contravariant_maps(const Bundle& src, const Bundle& dst) {
    return sum_over_base_maps(src, dst, [&](std::size_t b, std::size_t fb) {
        return power(Natural(src.fiber_size(b)), dst.fiber_size(fb));
    });
}

std::vector<BundleMap> enumerate_covariant_maps(const Bundle& src, const Bundle& dst) {
    to_materialized_size(count_covariant_maps(src, dst), "covariant bundle maps");
    std::vector<BundleMap> out;
    for_each_table(src.base().size, dst.base().size, [&](std::span<const std::size_t> f) {
        FinFunction base(src.base(), dst.base(), {f.begin(), f.end()});
        // One digit per total element; its radix is the size of the target fiber.
        std::vector<std::size_t> radices(src.total().size);
        for (std::size_t e = 0; e < radices.size(); ++e) radices[e] = dst.fiber_size(f[src.project(e)]);
        for_each_digits(radices, [&](const std::vector<std::size_t>& local) {
            std::vector<std::size_t> total(local.size());
            for (std::size_t e = 0; e < total.size(); ++e) total[e] = dst.encode(f[src.project(e)], local[e]);
            out.emplace_back(src, dst, base, FinFunction(src.total(), dst.total(), std::move(total)));
        });
    });
    return out;
}

std::vector<ContraBundleMap> enumerate_contravariant_maps(const Bundle& src, const Bundle& dst) {
    to_materialized_size(count_contravariant_maps(src, dst), "contravariant bundle maps");
    std::vector<ContraBundleMap> out;
    for_each_table(src.base().size, dst.base().size, [&](std::span<const std::size_t> f) {
        FinFunction base(src.base(), dst.base(), {f.begin(), f.end()});
        // Digits run over the concatenated backward tables E′_{f(b)} → E_b.
        std::vector<std::size_t> radices;
        std::vector<std::size_t> starts;
        for (std::size_t b = 0; b < f.size(); ++b) {
            starts.push_back(radices.size());
            radices.insert(radices.end(), dst.fiber_size(f[b]), src.fiber_size(b));
        }
        starts.push_back(radices.size());
        for_each_digits(radices, [&](const std::vector<std::size_t>& digits) {
            std::vector<FinFunction> back;
            for (std::size_t b = 0; b < f.size(); ++b) {
                std::vector<std::size_t> t(digits.begin() + static_cast<std::ptrdiff_t>(starts[b]),
                                           digits.begin() + static_cast<std::ptrdiff_t>(starts[b + 1]));
                back.emplace_back(FinSet(dst.fiber_size(f[b])), FinSet(src.fiber_size(b)), std::move(t));
            }
            out.emplace_back(src, dst, base, std::move(back));
        });
    });
    return out;
}

std::vector<BundleMap> enumerate_cartesian_maps(const Bundle& src, const Bundle& dst) {
    std::vector<BundleMap> out;
    for (auto& m : enumerate_covariant_maps(src, dst)) {
        if (is_cartesian(m)) out.push_back(std::move(m));
    }
    return out;
}

} // namespace dirichlet
