#pragma once

#include <cstdint>
#include <vector>

namespace semnav::perception {

/// Row-major run-length encoding over an h x w pixel grid: alternating run
/// lengths starting with a (possibly zero) background run. The sum of all
/// runs equals h * w.
std::vector<int64_t> rle_encode(const std::vector<int>& pixels, int h, int w);

/// Inverse of rle_encode. Throws std::invalid_argument when the runs are
/// negative or do not sum to h * w.
std::vector<int> rle_decode(const std::vector<int64_t>& counts, int h, int w);

}  // namespace semnav::perception
