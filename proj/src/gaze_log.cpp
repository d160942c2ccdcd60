#include "gazebench/gaze_log.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <sstream>

#include "gazebench/errors.hpp"
#include "gazebench/log.hpp"

namespace gazebench {

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool parse_double(const std::string& s, double& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    try {
        std::size_t used = 0;
        out = std::stod(t, &used);
        return used == t.size();
    } catch (const std::exception&) {
        return false;
    }
}

// {0,1} or {valid,invalid}, case-insensitive.
bool parse_validity(const std::string& s, bool& out) {
    const std::string t = lower(trim(s));
    if (t == "1" || t == "valid") {
        out = true;
        return true;
    }
    if (t == "0" || t == "invalid") {
        out = false;
        return true;
    }
    return false;
}

} // namespace

std::vector<TrialSamples> parse_gaze_log(std::istream& in, const GazeLogSchema& schema,
                                         ParseStats* stats) {
    std::string header;
    if (!std::getline(in, header)) throw EmptyInputError("gaze log: empty stream");
    if (!header.empty() && header.back() == '\r') header.pop_back();

    // Delimiter autodetection: whichever of comma/tab splits the header
    // into more fields wins.
    const char delim =
        std::count(header.begin(), header.end(), '\t') > std::count(header.begin(), header.end(), ',')
            ? '\t'
            : ',';

    const auto cols = split(header, delim);
    auto find_col = [&](const std::string& name) -> int {
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (trim(cols[i]) == name) return static_cast<int>(i);
        return -1;
    };
    auto require_col = [&](const std::string& name) {
        const int idx = find_col(name);
        if (idx < 0) throw SchemaError("gaze log: column '" + name + "' not found in header");
        return idx;
    };

    const int c_time = require_col(schema.timestamp_col);
    const int c_x = require_col(schema.x_col);
    const int c_y = require_col(schema.y_col);
    const int c_valid = require_col(schema.validity_col);
    const int c_part = require_col(schema.participant_col);
    const int c_stim = require_col(schema.stimulus_col);
    const int c_diff = schema.difficulty_col.empty() ? -1 : require_col(schema.difficulty_col);
    const int c_nodes = schema.nodes_col.empty() ? -1 : require_col(schema.nodes_col);
    const int max_col = std::max({c_time, c_x, c_y, c_valid, c_part, c_stim, c_diff, c_nodes});

    ParseStats local;
    std::vector<TrialSamples> trials;
    std::map<std::pair<std::string, std::string>, std::size_t> index; // first-appearance order

    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        ++local.rows_total;

        const auto fields = split(line, delim);
        if (static_cast<int>(fields.size()) <= max_col) {
            ++local.rows_skipped;
            continue;
        }

        GazeSample s;
        bool ok = parse_double(fields[c_time], s.timestamp_ms) && parse_double(fields[c_x], s.x) &&
                  parse_double(fields[c_y], s.y) && parse_validity(fields[c_valid], s.valid);
        const std::string participant = trim(fields[c_part]);
        const std::string stimulus = trim(fields[c_stim]);
        ok = ok && !participant.empty() && !stimulus.empty();
        if (!ok) {
            ++local.rows_skipped;
            continue;
        }

        const auto key = std::make_pair(participant, stimulus);
        auto it = index.find(key);
        if (it == index.end()) {
            TrialSamples t;
            t.participant_id = participant;
            t.stimulus_id = stimulus;
            if (c_diff >= 0) {
                try {
                    t.difficulty = difficulty_from_string(trim(fields[c_diff]));
                } catch (const SchemaError&) {
                    ++local.rows_skipped;
                    continue;
                }
            }
            if (c_nodes >= 0) {
                double n;
                if (!parse_double(fields[c_nodes], n)) {
                    ++local.rows_skipped;
                    continue;
                }
                try {
                    t.node_count = node_count_from_int(static_cast<int>(n));
                } catch (const SchemaError&) {
                    ++local.rows_skipped;
                    continue;
                }
            }
            it = index.emplace(key, trials.size()).first;
            trials.push_back(std::move(t));
        }

        auto& trial = trials[it->second];
        if (!trial.samples.empty() && s.timestamp_ms <= trial.samples.back().timestamp_ms) {
            // Timestamps must be strictly increasing within a trial stream.
            ++local.rows_skipped;
            continue;
        }
        trial.samples.push_back(s);
        ++local.rows_parsed;
    }

    if (stats) *stats = local;
    if (local.rows_skipped > 0)
        log::warn("gaze log: skipped ", local.rows_skipped, " of ", local.rows_total, " rows");
    if (local.rows_parsed == 0) throw EmptyInputError("gaze log: no parseable rows");
    return trials;
}

} // namespace gazebench
