#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dirichlet {

enum class ErrorKind {
    codomain_mismatch,
    domain_mismatch,
    shape_mismatch,
    base_mismatch,
    index_out_of_range,
    invalid_argument,
    not_commuting,
    not_fiberwise_bijective,
    not_cartesian,
    validation,
    enumeration_cap_exceeded,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type; `kind`
// lets callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

/// Maximum number of candidate tuples/elements any single enumeration may
/// materialize. Process-wide; defaults to 10^6.
std::size_t enumeration_cap();
void set_enumeration_cap(std::size_t cap);

/// Throws enumeration_cap_exceeded when `count` exceeds the current cap.
void check_cap(std::size_t count, std::string_view what);

class ScopedEnumerationCap {
public:
    explicit ScopedEnumerationCap(std::size_t cap);
    ~ScopedEnumerationCap();
    ScopedEnumerationCap(const ScopedEnumerationCap&) = delete;
    ScopedEnumerationCap& operator=(const ScopedEnumerationCap&) = delete;

private:
    std::size_t saved_;
};

} // namespace dirichlet
