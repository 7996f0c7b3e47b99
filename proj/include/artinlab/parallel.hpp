#pragma once

namespace artinlab {

/// Number of worker threads used by the OpenMP kernels. Resolution order:
/// set_thread_count(), then $ARTINLAB_THREADS, then the OpenMP default.
int thread_count();

/// n <= 0 restores the default resolution.
void set_thread_count(int n);

}  // namespace artinlab
