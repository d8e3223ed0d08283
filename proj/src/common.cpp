#include "hgs/common.hpp"

#include <cstdlib>

namespace hgs {

Caps& caps() {
  static Caps instance = [] {
    Caps c;
    if (const char* env = std::getenv("HGC_MAX_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != nullptr && *end == '\0' && v >= 2) c.hol_max = v;
    }
    return c;
  }();
  return instance;
}

}  // namespace hgs
