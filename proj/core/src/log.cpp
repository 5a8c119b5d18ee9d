#include "wigner/log.hpp"

#include <iostream>

namespace wigner::log {

namespace {
Sink g_sink;
}

void set_warning_sink(Sink sink) { g_sink = std::move(sink); }

void warn(const std::string& message) {
  if (g_sink) {
    g_sink(message);
  } else {
    std::cerr << "[wignerdeco] warning: " << message << "\n";
  }
}

void info(const std::string& message) {
  std::cerr << "[wignerdeco] " << message << "\n";
}

}  // namespace wigner::log
