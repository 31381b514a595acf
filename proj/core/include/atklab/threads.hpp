#pragma once

namespace atklab {

/// Worker cap for parallel sections: ATKLAB_THREADS if set, else the
/// hardware concurrency. Always >= 1.
int thread_cap();

/// Applies the cap to the OpenMP runtime. Call once at process start.
void apply_thread_cap();

}  // namespace atklab
