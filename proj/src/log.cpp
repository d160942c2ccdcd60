#include "gazebench/log.hpp"

#include <cstdlib>

namespace gazebench::log {

static Level parse_env() {
    const char* env = std::getenv("GAZEBENCH_LOG");
    if (!env) return Level::Warn;
    std::string v(env);
    for (auto& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (v == "error") return Level::Error;
    if (v == "warn" || v == "warning") return Level::Warn;
    if (v == "info") return Level::Info;
    if (v == "debug") return Level::Debug;
    return Level::Warn;
}

Level level() {
    static const Level lv = parse_env();
    return lv;
}

bool enabled(Level lv) {
    return static_cast<int>(lv) <= static_cast<int>(level());
}

void emit(Level lv, const std::string& msg) {
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::cerr << "[gazebench:" << names[static_cast<int>(lv)] << "] " << msg << "\n";
}

} // namespace gazebench::log
