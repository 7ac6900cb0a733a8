#pragma once

#include <cstddef>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dirichlet {

/// Exact cardinality of a (possibly unmaterialized) finite set.
using Natural = boost::multiprecision::cpp_int;

/// base^exponent with 0^0 = 1.
Natural power(const Natural& base, std::size_t exponent);

/// Converts a count to a materializable size, failing with
/// enumeration_cap_exceeded when it exceeds the enumeration cap.
std::size_t to_materialized_size(const Natural& count, std::string_view what);

/// Checked machine-size base^exponent (0^0 = 1), bounded by the enumeration cap.
std::size_t checked_power(std::size_t base, std::size_t exponent, std::string_view what);

} // namespace dirichlet
