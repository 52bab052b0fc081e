#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "semnav/core/types.hpp"

namespace semnav::core {

/// Dense row-major 2D grid. Row maps to world x, col to world y.
template <typename T>
class Grid2D {
 public:
  Grid2D() = default;
  Grid2D(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return data_.size(); }

  bool in_bounds(int r, int c) const {
    return r >= 0 && r < rows_ && c >= 0 && c < cols_;
  }
  bool in_bounds(GridIndex i) const { return in_bounds(i.row, i.col); }

  T& at(int r, int c) {
    assert(in_bounds(r, c));
    return data_[static_cast<size_t>(r) * cols_ + c];
  }
  const T& at(int r, int c) const {
    assert(in_bounds(r, c));
    return data_[static_cast<size_t>(r) * cols_ + c];
  }
  T& at(GridIndex i) { return at(i.row, i.col); }
  const T& at(GridIndex i) const { return at(i.row, i.col); }

  T& operator[](size_t i) { return data_[i]; }
  const T& operator[](size_t i) const { return data_[i]; }

  size_t index_of(int r, int c) const {
    return static_cast<size_t>(r) * cols_ + c;
  }
  GridIndex index_to_cell(size_t i) const {
    return {static_cast<int>(i / cols_), static_cast<int>(i % cols_)};
  }

  void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool operator==(const Grid2D&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

}  // namespace semnav::core
