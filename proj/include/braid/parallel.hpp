#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <vector>

namespace braid {

// Deterministic fork/join over [0, count): chunks run independently and the
// partial results are combined in chunk order.
template <class R, class PerChunk, class Combine>
R parallel_reduce(std::size_t count, int threads, PerChunk per_chunk,
                  Combine combine) {
  if (threads <= 1 || count < 2)
    return per_chunk(std::size_t{0}, count);
  std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::size_t chunk = (count + k - 1) / k;
  std::vector<std::future<R>> futs;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t b = i * chunk;
    std::size_t e = std::min(count, b + chunk);
    if (b >= e) break;
    futs.push_back(std::async(std::launch::async, per_chunk, b, e));
  }
  R acc = futs[0].get();
  for (std::size_t i = 1; i < futs.size(); ++i) combine(acc, futs[i].get());
  return acc;
}

}  // namespace braid
