#include "funk/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace funk {

void set_num_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int num_threads() { return omp_get_max_threads(); }

void init_threads_from_env() {
  const char* v = std::getenv("FUNKLIB_THREADS");
  if (!v) return;
  try {
    int n = std::stoi(v);
    if (n > 0) omp_set_num_threads(n);
  } catch (...) {
    // ignore unparsable values; OMP defaults stay in effect
  }
}

}  // namespace funk
