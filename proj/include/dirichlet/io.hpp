#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "dirichlet/bundle.hpp"
#include "dirichlet/series.hpp"

namespace dirichlet::io {

using nlohmann::json;

// Bundle:    {"fibers": [k_0, ..., k_{B-1}]}
// BundleMap: {"src": <bundle>, "dst": <bundle>, "base_map": [...], "total_map": [...]}
// Series:    {"kind": "dirichlet"|"polynomial", "coefficients": {"n": count, ...}}
//
// Parse failures throw Error(validation) naming the source, the field and the
// violated invariant.

Bundle bundle_from_json(const json& j, const std::string& source);
json to_json(const Bundle& pi);

/// A bundle map as read from disk, shapes checked but not yet the square.
struct RawBundleMap {
    Bundle src;
    Bundle dst;
    FinFunction base_map;
    FinFunction total_map;

    /// Throws NotCommuting if the square does not commute.
    BundleMap validate() const;
};

RawBundleMap raw_bundle_map_from_json(const json& j, const std::string& source);
BundleMap bundle_map_from_json(const json& j, const std::string& source);
json to_json(const BundleMap& m);
json to_json(const ContraBundleMap& m);
json to_json(const CardinalitySeries& s);
CardinalitySeries series_from_json(const json& j, const std::string& source);

json read_json_file(const std::filesystem::path& path);
Bundle load_bundle(const std::filesystem::path& path);
RawBundleMap load_raw_bundle_map(const std::filesystem::path& path);
BundleMap load_bundle_map(const std::filesystem::path& path);

} // namespace dirichlet::io
