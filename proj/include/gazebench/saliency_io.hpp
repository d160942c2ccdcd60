#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gazebench/types.hpp"

namespace gazebench {

/// Ordered multi-duration map set for one stimulus (bins strictly
/// increasing; a single map may carry no bin).
struct MapSet {
    std::string stimulus_id;
    std::vector<SaliencyMap> maps;
};

/// Parses the "_d<seconds>" suffix convention, e.g. chart_d0.5.png -> 0.5.
std::optional<double> duration_from_filename(const std::string& path);

/// Loads one or more map files into an ordered set. Duration bins come from
/// the filename convention; with a single file the bin is optional.
MapSet load_map_set(const std::vector<std::string>& paths, const std::string& stimulus_id = "");

/// Manifest JSON: either one object or an array of
/// {"stimulus_id":..., "maps":[{"path":..., "duration_s":...}]}.
/// Relative map paths resolve against the manifest's directory.
std::vector<MapSet> load_map_manifest(const std::string& manifest_path);

} // namespace gazebench
