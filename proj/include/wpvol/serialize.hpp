/**
 * @file serialize.hpp
 * @brief JSON wire formats: polynomials, intersection tables, times files,
 *        and the on-disk correlator cache.
 *
 * All emitters iterate canonical containers, so serialization is byte-stable
 * across runs, thread counts, and cache temperature.
 */
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "wpvol/poly.hpp"
#include "wpvol/transforms.hpp"

namespace wpvol {

using json = nlohmann::ordered_json;

// ---- polynomials ----

json to_json(const CorrelatorPoly& w);
json to_json(const VolumePoly& v);
CorrelatorPoly correlator_from_json(const json& j);
VolumePoly volume_from_json(const json& j);

// ---- intersection tables ----

json to_json(const IntersectionTable& t);

// ---- times files: {"3": "3", "5": "-2/3*pi^2", ...} ----

std::map<int, PiScalar> times_from_json(const json& j);
std::map<int, PiScalar> load_times_file(const std::filesystem::path& path);

// ---- correlator cache entries ----

json cache_to_json(const std::string& curve_id, int y_order, const CorrelatorPoly& w);

/// Returns the stored correlator only if every recorded field matches the
/// expectation; anything off (or malformed) reads as a cache miss.
std::optional<CorrelatorPoly> cache_from_json(const json& j, const std::string& curve_id,
                                              int y_order, int g, int n);

// ---- small file helpers ----

std::optional<std::string> read_text_file(const std::filesystem::path& path);
void write_text_file_atomic(const std::filesystem::path& path, const std::string& body);

}  // namespace wpvol
