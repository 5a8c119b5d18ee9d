#pragma once

#include <functional>
#include <string>

namespace wigner::log {

using Sink = std::function<void(const std::string&)>;

// Replaces the warning sink (default: stderr). Pass nullptr to restore the default.
void set_warning_sink(Sink sink);

void warn(const std::string& message);
void info(const std::string& message);

}  // namespace wigner::log
