#include "gazebench/scanpath_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gazebench/errors.hpp"

namespace gazebench {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json to_json_doc(const Scanpath& sp) {
    ordered_json doc;
    doc["stimulus_id"] = sp.stimulus_id;
    if (!sp.participant_id.empty()) doc["participant_id"] = sp.participant_id;
    doc["source"] = sp.source == Source::Human ? "human" : "synthetic";
    if (!sp.generator.empty()) doc["generator"] = sp.generator;
    ordered_json fixes = ordered_json::array();
    for (const auto& f : sp.fixations) {
        ordered_json jf;
        jf["x"] = f.x;
        jf["y"] = f.y;
        jf["duration_ms"] = f.duration_ms;
        jf["onset_ms"] = f.onset_ms;
        fixes.push_back(std::move(jf));
    }
    doc["fixations"] = std::move(fixes);
    return doc;
}

Scanpath from_json_doc(const ordered_json& doc) {
    Scanpath sp;
    if (!doc.is_object() || !doc.contains("fixations") || !doc["fixations"].is_array())
        throw SchemaError("scanpath JSON: missing fixations array");
    sp.stimulus_id = doc.value("stimulus_id", std::string());
    sp.participant_id = doc.value("participant_id", std::string());
    const std::string src = doc.value("source", std::string("human"));
    sp.source = src == "synthetic" ? Source::Synthetic : Source::Human;
    sp.generator = doc.value("generator", std::string());
    for (const auto& jf : doc["fixations"]) {
        if (!jf.contains("x") || !jf.contains("y"))
            throw SchemaError("scanpath JSON: fixation lacks x/y");
        Fixation f;
        f.x = jf["x"].get<double>();
        f.y = jf["y"].get<double>();
        f.duration_ms = jf.value("duration_ms", 0.0);
        f.onset_ms = jf.value("onset_ms", 0.0);
        sp.fixations.push_back(f);
    }
    if (sp.fixations.empty()) throw SchemaError("scanpath JSON: empty fixation list");
    return sp;
}

} // namespace

std::string scanpath_to_json(const Scanpath& sp) {
    return to_json_doc(sp).dump();
}

Scanpath scanpath_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("scanpath JSON parse failed: ") + e.what());
    }
    return from_json_doc(doc);
}

void write_scanpath_file(const std::string& path, const Scanpath& sp) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << to_json_doc(sp).dump(2) << "\n";
}

Scanpath read_scanpath_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return scanpath_from_json(buf.str());
    } catch (const SchemaError& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void write_scanpath_jsonl(std::ostream& out, const std::vector<Scanpath>& paths) {
    for (const auto& sp : paths) out << scanpath_to_json(sp) << "\n";
}

std::vector<Scanpath> read_scanpath_jsonl(std::istream& in) {
    std::vector<Scanpath> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(scanpath_from_json(line));
    }
    return out;
}

} // namespace gazebench
