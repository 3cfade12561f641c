// Copyright 2026 The maxpareto Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAXPARETO_MATRIX_HPP
#define MAXPARETO_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace maxpareto {

/// Minimal dense row-major matrix. The solver tableaux have their own
/// storage; this is for problem data only.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  /// Builds from nested initializer lists; all rows must have equal length.
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
      assert(static_cast<int>(row.size()) == cols_);
      for (const auto& v : row) data_.push_back(v);
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  std::vector<T> row(int i) const {
    return std::vector<T>(data_.begin() + static_cast<size_t>(i) * cols_,
                          data_.begin() + static_cast<size_t>(i + 1) * cols_);
  }

  /// y = M x. Zero entries are skipped; problem matrices here are sparse in
  /// practice even though storage is dense.
  std::vector<T> mul(const std::vector<T>& x) const {
    assert(static_cast<int>(x.size()) == cols_);
    const T zero{};
    std::vector<T> y(rows_, zero);
    for (int i = 0; i < rows_; ++i) {
      T acc{};
      for (int j = 0; j < cols_; ++j) {
        const T& v = (*this)(i, j);
        if (v == zero || x[j] == zero) continue;
        acc += v * x[j];
      }
      y[i] = acc;
    }
    return y;
  }

  /// y = M^T x
  std::vector<T> mul_transposed(const std::vector<T>& x) const {
    assert(static_cast<int>(x.size()) == rows_);
    const T zero{};
    std::vector<T> y(cols_, zero);
    for (int i = 0; i < rows_; ++i) {
      if (x[i] == zero) continue;
      for (int j = 0; j < cols_; ++j) {
        const T& v = (*this)(i, j);
        if (v == zero) continue;
        y[j] += v * x[i];
      }
    }
    return y;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  assert(a.size() == b.size());
  T acc{};
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace maxpareto

#endif  // MAXPARETO_MATRIX_HPP
