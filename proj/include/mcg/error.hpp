#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mcg {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an intermediate free word exceeds the configured cap.
struct word_cap_error : error {
  explicit word_cap_error(std::size_t cap)
      : error("free word exceeded length cap " + std::to_string(cap) +
              "; raise MCG_WORD_CAP if the input is legitimate") {}
};

struct parse_error : error {
  std::size_t line;
  parse_error(std::size_t line_, const std::string& what_)
      : error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct illegal_move_error : error {
  std::size_t step;
  illegal_move_error(std::size_t step_, const std::string& what_)
      : error("step " + std::to_string(step_ + 1) + ": " + what_), step(step_) {}
};

// Global cap on intermediate word lengths, configurable via MCG_WORD_CAP.
inline std::size_t& word_cap() {
  static std::size_t cap = [] {
    if (const char* env = std::getenv("MCG_WORD_CAP")) {
      long long v = std::atoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1000000);
  }();
  return cap;
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw error(what);
}

}  // namespace mcg
