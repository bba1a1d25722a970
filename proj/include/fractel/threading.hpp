#ifndef FRACTEL_THREADING_HPP
#define FRACTEL_THREADING_HPP

#include <cstddef>
#include <functional>

namespace fractel {

/// Worker count: min(hardware_concurrency, FRACTEL_THREADS if set).
std::size_t worker_count();

/// Runs fn(i) for i in [begin, end) on contiguous index blocks. Each index
/// is processed exactly once by one worker, so results do not depend on the
/// worker count as long as fn(i) only writes state owned by index i.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn);

}  // namespace fractel

#endif
