#include "semnav/perception/rle.hpp"

#include <stdexcept>

namespace semnav::perception {

std::vector<int64_t> rle_encode(const std::vector<int>& pixels, int h, int w) {
  const int64_t total = static_cast<int64_t>(h) * w;
  std::vector<int64_t> counts;
  int64_t pos = 0;
  size_t i = 0;
  while (pos < total) {
    // background run
    const int64_t next = i < pixels.size() ? pixels[i] : total;
    if (next < pos) throw std::invalid_argument("rle_encode: unsorted or duplicate pixels");
    if (next >= total && i < pixels.size())
      throw std::invalid_argument("rle_encode: pixel out of range");
    counts.push_back(next - pos);
    pos = next;
    if (pos >= total) break;
    // foreground run
    int64_t run = 0;
    while (i < pixels.size() && pixels[i] == pos + run) {
      ++run;
      ++i;
    }
    counts.push_back(run);
    pos += run;
  }
  if (counts.empty()) counts.push_back(total);
  return counts;
}

std::vector<int> rle_decode(const std::vector<int64_t>& counts, int h, int w) {
  const int64_t total = static_cast<int64_t>(h) * w;
  std::vector<int> pixels;
  int64_t pos = 0;
  bool foreground = false;
  for (const int64_t run : counts) {
    if (run < 0) throw std::invalid_argument("rle_decode: negative run");
    if (foreground)
      for (int64_t k = 0; k < run; ++k) pixels.push_back(static_cast<int>(pos + k));
    pos += run;
    foreground = !foreground;
  }
  if (pos != total) throw std::invalid_argument("rle_decode: runs do not cover the grid");
  return pixels;
}

}  // namespace semnav::perception
