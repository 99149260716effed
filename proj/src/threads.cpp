#include <multizero/threads.hpp>

#include <omp.h>

#include <cstdlib>
#include <string>

namespace multizero {

int max_threads() {
    static const int cached = [] {
        int n = omp_get_max_threads();
        if (const char* env = std::getenv("MULTIZERO_THREADS")) {
            try {
                const int cap = std::stoi(env);
                if (cap > 0 && cap < n) n = cap;
            } catch (const std::exception&) {
                // ignore malformed values, keep the OpenMP default
            }
        }
        return n < 1 ? 1 : n;
    }();
    return cached;
}

}  // namespace multizero
