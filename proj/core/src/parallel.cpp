#include "robinc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace robinc {

int thread_count() {
  if (const char* env = std::getenv("ROBINC_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

double pairwise_sum(const double* data, std::size_t count) {
  if (count == 0) return 0.0;
  if (count <= 8) {
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) acc += data[i];
    return acc;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

}  // namespace robinc
