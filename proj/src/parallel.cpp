#include "wfs/parallel.hpp"

#include <cstdlib>
#include <string>

namespace wfs {
namespace {

unsigned from_environment() {
  if (const char* env = std::getenv("WFS_JOBS")) {
    try {
      auto n = std::stoul(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (...) {
    }
  }
  return 1;
}

std::atomic<unsigned>& job_count() {
  static std::atomic<unsigned> n{from_environment()};
  return n;
}

}  // namespace

unsigned jobs() { return job_count().load(); }
void set_jobs(unsigned n) { job_count().store(n == 0 ? 1 : n); }

}  // namespace wfs
