#pragma once

namespace lasd {

/// Worker count for parallel loops. Resolution order: an explicit positive
/// request, then the LASD_THREADS environment variable, then the OpenMP
/// default. Results never depend on the count.
int resolve_threads(int requested = 0);

/// Sets the count used by subsequent parallel loops in this process.
void set_threads(int threads);
int current_threads();

/// True inside an active parallel region; nested loops run serially.
bool in_parallel();

}  // namespace lasd
