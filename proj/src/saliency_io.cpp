#include "gazebench/saliency_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gazebench/errors.hpp"
#include "gazebench/image_io.hpp"

namespace fs = std::filesystem;

namespace gazebench {

std::optional<double> duration_from_filename(const std::string& path) {
    std::string stem = fs::path(path).stem().string();
    const auto pos = stem.rfind("_d");
    if (pos == std::string::npos) return std::nullopt;
    const std::string tail = stem.substr(pos + 2);
    if (tail.empty()) return std::nullopt;
    try {
        std::size_t used = 0;
        const double v = std::stod(tail, &used);
        if (used != tail.size() || v <= 0.0) return std::nullopt;
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

namespace {

void sort_and_check_bins(MapSet& set, const std::string& context) {
    if (set.maps.empty()) throw EmptyInputError(context + ": no maps");
    if (set.maps.size() == 1) return;
    for (const auto& m : set.maps)
        if (!m.duration_bin_s)
            throw SchemaError(context + ": multi-duration set needs a duration for every map");
    std::sort(set.maps.begin(), set.maps.end(), [](const SaliencyMap& a, const SaliencyMap& b) {
        return *a.duration_bin_s < *b.duration_bin_s;
    });
    for (std::size_t i = 1; i < set.maps.size(); ++i)
        if (*set.maps[i].duration_bin_s <= *set.maps[i - 1].duration_bin_s)
            throw SchemaError(context + ": duration bins must be strictly increasing");
}

std::string stimulus_from_filename(const std::string& path) {
    std::string stem = fs::path(path).stem().string();
    const auto pos = stem.rfind("_d");
    if (pos != std::string::npos && duration_from_filename(path)) stem = stem.substr(0, pos);
    return stem;
}

} // namespace

MapSet load_map_set(const std::vector<std::string>& paths, const std::string& stimulus_id) {
    if (paths.empty()) throw EmptyInputError("load_map_set: no map files given");
    MapSet set;
    set.stimulus_id = stimulus_id.empty() ? stimulus_from_filename(paths.front()) : stimulus_id;
    for (const auto& p : paths) {
        SaliencyMap m = load_grayscale(p);
        m.duration_bin_s = duration_from_filename(p);
        set.maps.push_back(std::move(m));
    }
    sort_and_check_bins(set, "map set for " + set.stimulus_id);
    return set;
}

std::vector<MapSet> load_map_manifest(const std::string& manifest_path) {
    std::ifstream in(manifest_path, std::ios::binary);
    if (!in) throw IoError("cannot open " + manifest_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(manifest_path + ": " + e.what());
    }

    const fs::path base = fs::path(manifest_path).parent_path();
    auto parse_entry = [&](const nlohmann::json& entry) {
        if (!entry.contains("stimulus_id") || !entry.contains("maps"))
            throw SchemaError(manifest_path + ": map entry needs stimulus_id and maps");
        MapSet set;
        set.stimulus_id = entry["stimulus_id"].get<std::string>();
        for (const auto& jm : entry["maps"]) {
            if (!jm.contains("path")) throw SchemaError(manifest_path + ": map needs a path");
            fs::path p = jm["path"].get<std::string>();
            if (p.is_relative()) p = base / p;
            SaliencyMap m = load_grayscale(p.string());
            if (jm.contains("duration_s"))
                m.duration_bin_s = jm["duration_s"].get<double>();
            else
                m.duration_bin_s = duration_from_filename(p.string());
            set.maps.push_back(std::move(m));
        }
        sort_and_check_bins(set, manifest_path + " [" + set.stimulus_id + "]");
        return set;
    };

    std::vector<MapSet> out;
    if (doc.is_array()) {
        for (const auto& e : doc) out.push_back(parse_entry(e));
    } else if (doc.is_object()) {
        out.push_back(parse_entry(doc));
    } else {
        throw SchemaError(manifest_path + ": expected object or array");
    }
    if (out.empty()) throw EmptyInputError(manifest_path + ": no map entries");
    return out;
}

} // namespace gazebench
