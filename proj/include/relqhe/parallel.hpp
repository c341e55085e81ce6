#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace relqhe {

// Evaluates fn(i) for i in [0, n) across OpenMP threads. Results keep index
// order; the lowest-index exception, if any, is rethrown after the loop.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    std::vector<std::exception_ptr> err(n);
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        try {
            out[k] = fn(k);
        } catch (...) {
            err[k] = std::current_exception();
        }
    }
    for (auto& e : err)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace relqhe
