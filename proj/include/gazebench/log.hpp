#pragma once

#include <iostream>
#include <sstream>
#include <string>

namespace gazebench::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Log level comes from the GAZEBENCH_LOG environment variable
// (error|warn|info|debug); default is warn.
Level level();

bool enabled(Level lv);

void emit(Level lv, const std::string& msg);

template <typename... Args>
void write(Level lv, Args&&... args) {
    if (!enabled(lv)) return;
    std::ostringstream oss;
    (oss << ... << args);
    emit(lv, oss.str());
}

template <typename... Args>
void error(Args&&... args) { write(Level::Error, std::forward<Args>(args)...); }
template <typename... Args>
void warn(Args&&... args) { write(Level::Warn, std::forward<Args>(args)...); }
template <typename... Args>
void info(Args&&... args) { write(Level::Info, std::forward<Args>(args)...); }
template <typename... Args>
void debug(Args&&... args) { write(Level::Debug, std::forward<Args>(args)...); }

} // namespace gazebench::log
