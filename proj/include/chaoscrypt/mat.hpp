#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace chaoscrypt {

// Dense row-major matrix; the minimal surface the permutation and cipher
// stages need.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ByteMatrix = Matrix<std::uint8_t>;

// Binary matrix; entries restricted to {0, 1}.
using BitMatrix = Matrix<std::uint8_t>;

}  // namespace chaoscrypt
