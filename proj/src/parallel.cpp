#include "virtgraph/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace vg {

int worker_count() {
  if (const char* s = std::getenv("VIRTGRAPH_WORKERS")) {
    try {
      int n = std::stoi(s);
      if (n > 0) return n;
    } catch (...) {
    }
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? static_cast<int>(h) : 1;
}

}  // namespace vg
