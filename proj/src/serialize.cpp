#include "wpvol/serialize.hpp"

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wpvol {

namespace {

json terms_to_json(const NVarPoly& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.coeffs) {
        json t;
        t["d"] = key;
        t["coeff"] = c.to_string();
        terms.push_back(std::move(t));
    }
    return terms;
}

NVarPoly terms_from_json(const json& terms, int n) {
    if (!terms.is_array()) throw std::invalid_argument("poly json: \"terms\" must be an array");
    NVarPoly p;
    p.n = n;
    for (const auto& t : terms) {
        std::vector<int> key = t.at("d").get<std::vector<int>>();
        if (static_cast<int>(key.size()) != n)
            throw std::invalid_argument("poly json: exponent width mismatch");
        PiScalar c = PiScalar::from_string(t.at("coeff").get<std::string>());
        if (!p.coeffs.emplace(canonical_key(std::move(key)), std::move(c)).second)
            throw std::invalid_argument("poly json: duplicate exponent key");
    }
    return p;
}

int get_int(const json& j, const char* field) {
    const auto& v = j.at(field);
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("poly json: \"") + field +
                                                            "\" must be an integer");
    return v.get<int>();
}

}  // namespace

json to_json(const CorrelatorPoly& w) {
    json j;
    j["g"] = w.g;
    j["n"] = w.n();
    j["kind"] = "correlator";
    j["terms"] = terms_to_json(w.p);
    return j;
}

json to_json(const VolumePoly& v) {
    json j;
    j["g"] = v.g;
    j["n"] = v.n();
    j["kind"] = "volume";
    j["convention"] = v.convention == Convention::paper ? "paper" : "identity";
    j["terms"] = terms_to_json(v.p);
    return j;
}

CorrelatorPoly correlator_from_json(const json& j) {
    if (j.at("kind").get<std::string>() != "correlator")
        throw std::invalid_argument("poly json: expected kind \"correlator\"");
    CorrelatorPoly w;
    w.g = get_int(j, "g");
    w.p = terms_from_json(j.at("terms"), get_int(j, "n"));
    validate_correlator(w);
    return w;
}

VolumePoly volume_from_json(const json& j) {
    if (j.at("kind").get<std::string>() != "volume")
        throw std::invalid_argument("poly json: expected kind \"volume\"");
    VolumePoly v;
    v.g = get_int(j, "g");
    std::string conv = j.at("convention").get<std::string>();
    if (conv == "paper")
        v.convention = Convention::paper;
    else if (conv == "identity")
        v.convention = Convention::identity;
    else
        throw std::invalid_argument("poly json: unknown convention \"" + conv + "\"");
    v.p = terms_from_json(j.at("terms"), get_int(j, "n"));
    validate_volume(v);
    return v;
}

json to_json(const IntersectionTable& t) {
    json j;
    j["g"] = t.g;
    j["n"] = t.n;
    json entries = json::array();
    for (const auto& e : t.entries) {
        json row;
        row["d"] = e.d;
        row["d0"] = e.d0;
        row["value"] = e.value.to_string();
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::map<int, PiScalar> times_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("times json: expected an object");
    std::map<int, PiScalar> times;
    for (const auto& [key, value] : j.items()) {
        if (key.empty() ||
            !std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("times json: key \"" + key +
                                        "\" is not a positive integer");
        int idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw std::invalid_argument("times json: key \"" + key + "\" is out of range");
        }
        if (!value.is_string())
            throw std::invalid_argument("times json: value for \"" + key +
                                        "\" must be a coefficient string");
        if (!times.emplace(idx, PiScalar::from_string(value.get<std::string>())).second)
            throw std::invalid_argument("times json: duplicate key \"" + key + "\"");
    }
    return times;
}

std::map<int, PiScalar> load_times_file(const std::filesystem::path& path) {
    auto body = read_text_file(path);
    if (!body) throw std::invalid_argument("times file: cannot read " + path.string());
    json j;
    try {
        j = json::parse(*body);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("times file: " + path.string() + ": " + e.what());
    }
    return times_from_json(j);
}

json cache_to_json(const std::string& curve_id, int y_order, const CorrelatorPoly& w) {
    json j;
    j["curve"] = curve_id;
    j["y_order"] = y_order;
    j["g"] = w.g;
    j["n"] = w.n();
    j["kind"] = "correlator";
    j["terms"] = terms_to_json(w.p);
    return j;
}

std::optional<CorrelatorPoly> cache_from_json(const json& j, const std::string& curve_id,
                                              int y_order, int g, int n) {
    try {
        if (j.at("curve").get<std::string>() != curve_id) return std::nullopt;
        if (get_int(j, "y_order") != y_order) return std::nullopt;
        if (get_int(j, "g") != g || get_int(j, "n") != n) return std::nullopt;
        if (j.at("kind").get<std::string>() != "correlator") return std::nullopt;
        CorrelatorPoly w;
        w.g = g;
        w.p = terms_from_json(j.at("terms"), n);
        return w;
    } catch (...) {
        return std::nullopt;
    }
}

std::optional<std::string> read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream body;
    body << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return std::move(body).str();
}

void write_text_file_atomic(const std::filesystem::path& path, const std::string& body) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << body;
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot replace " + path.string());
    }
}

}  // namespace wpvol
