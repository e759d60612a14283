#pragma once

namespace funk {

// Thread-count control for the OpenMP kernels.  Every parallel loop in the
// library assigns whole output elements to threads and keeps the per-element
// summation order fixed, so results are bitwise independent of the count.

// Reads FUNKLIB_THREADS from the environment (if set and positive) and
// applies it.  Call once at program start; safe to call repeatedly.
void init_threads_from_env();

void set_num_threads(int n);
int num_threads();

}  // namespace funk
