#include "dobinski/real.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

namespace dobinski {

unsigned parse_precision(const char* text) {
  if (text == nullptr || *text == '\0') return kDefaultWorkingDigits;
  char* end = nullptr;
  const long v = std::strtol(text, &end, 10);
  if (end == text || *end != '\0') return kDefaultWorkingDigits;
  if (v < 20) return 20;
  if (v > 10000) return 10000;
  return static_cast<unsigned>(v);
}

unsigned working_digits() {
  static std::once_flag once;
  static unsigned digits = kDefaultWorkingDigits;
  std::call_once(once, [] {
    digits = parse_precision(std::getenv("DOBINSKI_PRECISION"));
    Real::default_precision(digits);
  });
  return digits;
}

}  // namespace dobinski
