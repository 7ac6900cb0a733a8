#include "dirichlet/io.hpp"

#include <fstream>

#include "dirichlet/error.hpp"

namespace dirichlet::io {

namespace {

[[noreturn]] void invalid(const std::string& source, const std::string& field, const std::string& invariant) {
    fail(ErrorKind::validation, source + ": field '" + field + "': " + invariant);
}

const json& require(const json& j, const char* key, const std::string& source) {
    if (!j.is_object()) invalid(source, key, "enclosing value must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) invalid(source, key, "required field is missing");
    return *it;
}

std::vector<std::size_t> index_array(const json& j, const std::string& source, const std::string& field) {
    if (!j.is_array()) invalid(source, field, "must be an array of nonnegative integers");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_unsigned() && !(j[i].is_number_integer() && j[i].get<long long>() >= 0)) {
            invalid(source, field, "entry " + std::to_string(i) + " is not a nonnegative integer");
        }
        out.push_back(j[i].get<std::size_t>());
    }
    return out;
}

FinFunction function_field(const json& j, FinSet dom, FinSet cod, const std::string& source, const std::string& field) {
    auto t = index_array(j, source, field);
    if (t.size() != dom.size) {
        invalid(source, field, "table length " + std::to_string(t.size()) + " must equal domain size " +
                                   std::to_string(dom.size));
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= cod.size) {
            invalid(source, field, "entry " + std::to_string(i) + " = " + std::to_string(t[i]) +
                                       " must be below codomain size " + std::to_string(cod.size));
        }
    }
    return {dom, cod, std::move(t)};
}

} // namespace

Bundle bundle_from_json(const json& j, const std::string& source) {
    return Bundle(index_array(require(j, "fibers", source), source, "fibers"));
}

json to_json(const Bundle& pi) { return json{{"fibers", pi.fiber_sizes()}}; }

BundleMap RawBundleMap::validate() const { return {src, dst, base_map, total_map}; }

RawBundleMap raw_bundle_map_from_json(const json& j, const std::string& source) {
    auto src = bundle_from_json(require(j, "src", source), source + " (src)");
    auto dst = bundle_from_json(require(j, "dst", source), source + " (dst)");
    auto base = function_field(require(j, "base_map", source), src.base(), dst.base(), source, "base_map");
    auto total = function_field(require(j, "total_map", source), src.total(), dst.total(), source, "total_map");
    return {std::move(src), std::move(dst), std::move(base), std::move(total)};
}

BundleMap bundle_map_from_json(const json& j, const std::string& source) {
    auto raw = raw_bundle_map_from_json(j, source);
    for (std::size_t e = 0; e < raw.src.total().size; ++e) {
        if (raw.dst.project(raw.total_map(e)) != raw.base_map(raw.src.project(e))) {
            fail(ErrorKind::validation, source + ": field 'total_map': square must commute (pi' . total_map = "
                                                 "base_map . pi), fails at total element " + std::to_string(e));
        }
    }
    return raw.validate();
}

json to_json(const BundleMap& m) {
    auto base = m.base_map().table();
    auto total = m.total_map().table();
    return json{{"src", to_json(m.src())},
                {"dst", to_json(m.dst())},
                {"base_map", std::vector<std::size_t>(base.begin(), base.end())},
                {"total_map", std::vector<std::size_t>(total.begin(), total.end())}};
}

json to_json(const ContraBundleMap& m) {
    auto base = m.base_map().table();
    json back = json::array();
    for (const auto& f : m.fiber_back()) back.push_back(std::vector<std::size_t>(f.table().begin(), f.table().end()));
    return json{{"src", to_json(m.src())},
                {"dst", to_json(m.dst())},
                {"base_map", std::vector<std::size_t>(base.begin(), base.end())},
                {"fiber_back", back}};
}

json to_json(const CardinalitySeries& s) {
    json coeffs = json::object();
    for (const auto& [n, count] : s.coefficients) coeffs[std::to_string(n)] = count.convert_to<std::uint64_t>();
    return json{{"kind", std::string(to_string(s.kind))}, {"coefficients", coeffs}};
}

CardinalitySeries series_from_json(const json& j, const std::string& source) {
    const auto& kind = require(j, "kind", source);
    auto parsed = kind.is_string() ? parse_series_kind(kind.get<std::string>()) : std::nullopt;
    if (!parsed) invalid(source, "kind", "must be \"dirichlet\" or \"polynomial\"");
    CardinalitySeries s{*parsed, {}};
    const auto& coeffs = require(j, "coefficients", source);
    if (!coeffs.is_object()) invalid(source, "coefficients", "must be an object mapping n to a count");
    for (const auto& [key, value] : coeffs.items()) {
        std::size_t n = 0;
        try {
            std::size_t used = 0;
            n = std::stoull(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            invalid(source, "coefficients", "key '" + key + "' is not a nonnegative integer");
        }
        if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0) {
            invalid(source, "coefficients", "count for n=" + key + " must be a positive integer");
        }
        s.coefficients[n] = value.get<std::uint64_t>();
    }
    return s;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::validation, path.string() + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::validation, path.string() + ": malformed JSON (" + e.what() + ")");
    }
}

Bundle load_bundle(const std::filesystem::path& path) { return bundle_from_json(read_json_file(path), path.string()); }

RawBundleMap load_raw_bundle_map(const std::filesystem::path& path) {
    return raw_bundle_map_from_json(read_json_file(path), path.string());
}

BundleMap load_bundle_map(const std::filesystem::path& path) {
    return bundle_map_from_json(read_json_file(path), path.string());
}

} // namespace dirichlet::io
