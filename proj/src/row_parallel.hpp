#pragma once

#include <exception>

namespace nnsamp::detail {

// Runs body(i) for i in [0, count). Rows write disjoint state, so the
// parallel and serial paths produce identical bits. An exception thrown by a
// row is rethrown after the loop; the lowest row index wins so reruns report
// the same failure.
template <typename Body>
void for_each_row(int count, bool parallel, Body&& body) {
#ifdef _OPENMP
    if (parallel) {
        std::exception_ptr error;
        int error_row = count;
#pragma omp parallel for schedule(static)
        for (int i = 0; i < count; ++i) {
            try {
                body(i);
            } catch (...) {
#pragma omp critical(nnsamp_row_error)
                if (i < error_row) {
                    error_row = i;
                    error = std::current_exception();
                }
            }
        }
        if (error) std::rethrow_exception(error);
        return;
    }
#else
    (void)parallel;
#endif
    for (int i = 0; i < count; ++i) body(i);
}

}  // namespace nnsamp::detail
