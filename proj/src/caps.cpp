#include "bqf/caps.hpp"

namespace bqf {

Caps &caps() {
  static Caps instance;
  return instance;
}

} // namespace bqf
