#include "dirichlet/error.hpp"
#include "dirichlet/count.hpp"

#include <atomic>

namespace dirichlet {

namespace {
std::atomic<std::size_t> g_cap{1'000'000};
}

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::codomain_mismatch: return "CodomainMismatch";
    case ErrorKind::domain_mismatch: return "DomainMismatch";
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::base_mismatch: return "BaseMismatch";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::not_commuting: return "NotCommuting";
    case ErrorKind::not_fiberwise_bijective: return "NotFiberwiseBijective";
    case ErrorKind::not_cartesian: return "NotCartesian";
    case ErrorKind::validation: return "ValidationError";
    case ErrorKind::enumeration_cap_exceeded: return "EnumerationCapExceeded";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

std::size_t enumeration_cap() { return g_cap.load(std::memory_order_relaxed); }

void set_enumeration_cap(std::size_t cap) {
    if (cap == 0) fail(ErrorKind::invalid_argument, "enumeration cap must be >= 1");
    g_cap.store(cap, std::memory_order_relaxed);
}

void check_cap(std::size_t count, std::string_view what) {
    if (count > enumeration_cap()) {
        fail(ErrorKind::enumeration_cap_exceeded,
             std::string(what) + " needs " + std::to_string(count) + " candidates, cap is " +
                 std::to_string(enumeration_cap()));
    }
}

ScopedEnumerationCap::ScopedEnumerationCap(std::size_t cap) : saved_(enumeration_cap()) {
    set_enumeration_cap(cap);
}

ScopedEnumerationCap::~ScopedEnumerationCap() { g_cap.store(saved_, std::memory_order_relaxed); }

Natural power(const Natural& base, std::size_t exponent) {
    Natural result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        result *= base;
        if (result == 0) break;
    }
    return result;
}

std::size_t to_materialized_size(const Natural& count, std::string_view what) {
    if (count > Natural(enumeration_cap())) {
        fail(ErrorKind::enumeration_cap_exceeded,
             std::string(what) + " has " + count.str() + " elements, cap is " +
                 std::to_string(enumeration_cap()));
    }
    return count.convert_to<std::size_t>();
}

std::size_t checked_power(std::size_t base, std::size_t exponent, std::string_view what) {
    return to_materialized_size(power(Natural(base), exponent), what);
}

} // namespace dirichlet
