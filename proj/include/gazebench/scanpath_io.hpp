#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gazebench/types.hpp"

namespace gazebench {

/// Serializes to the toolkit's scanpath document:
/// {"stimulus_id":..., "participant_id":..., "source":"human"|"synthetic",
///  "generator":..., "fixations":[{"x","y","duration_ms","onset_ms"}]}
/// Key order and number formatting are stable, so equal scanpaths give
/// byte-identical output.
std::string scanpath_to_json(const Scanpath& path);

Scanpath scanpath_from_json(const std::string& text);

void write_scanpath_file(const std::string& path, const Scanpath& sp);
Scanpath read_scanpath_file(const std::string& path);

/// JSON-lines stream: one scanpath document per line.
void write_scanpath_jsonl(std::ostream& out, const std::vector<Scanpath>& paths);
std::vector<Scanpath> read_scanpath_jsonl(std::istream& in);

} // namespace gazebench
