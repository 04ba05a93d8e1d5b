#ifndef METPOLY_PARALLEL_HPP
#define METPOLY_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace metpoly {

/// Worker count used by parallel_for. 0 = hardware concurrency.
void set_thread_count(int threads);
int thread_count();

/// Run fn(i) for i in [0, count). Tasks must write only to disjoint,
/// preallocated slots so results are identical for any worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace metpoly

#endif
