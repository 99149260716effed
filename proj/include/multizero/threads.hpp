#ifndef MULTIZERO_THREADS_HPP
#define MULTIZERO_THREADS_HPP

namespace multizero {

/// Worker count for parallel kernels: the OpenMP maximum, capped by the
/// MULTIZERO_THREADS environment variable when that is set to a positive
/// integer. Read once and cached.
int max_threads();

}  // namespace multizero

#endif
