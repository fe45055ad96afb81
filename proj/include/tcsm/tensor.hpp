// Copyright 2026 The tcsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TCSM_TENSOR_HPP_
#define TCSM_TENSOR_HPP_

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "tcsm/error.hpp"

namespace tcsm {

// Dense row-major n-d array. Images are stored channel-planar {C, H, W},
// masks and probability maps as {H, W}, batches as {B, ...}.
template <typename T>
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape, T value = T{})
      : shape_(std::move(shape)),
        data_(count(shape_), value) {}

  Tensor(std::initializer_list<std::size_t> shape, T value = T{})
      : Tensor(std::vector<std::size_t>(shape), value) {}

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  std::size_t dim(std::size_t i) const { return shape_.at(i); }
  bool empty() const { return data_.empty(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  // 2-d accessors (rank must be 2).
  T& at(std::size_t r, std::size_t c) { return data_[r * shape_[1] + c]; }
  const T& at(std::size_t r, std::size_t c) const {
    return data_[r * shape_[1] + c];
  }

  // 3-d accessors (rank must be 3).
  T& at(std::size_t ch, std::size_t r, std::size_t c) {
    return data_[(ch * shape_[1] + r) * shape_[2] + c];
  }
  const T& at(std::size_t ch, std::size_t r, std::size_t c) const {
    return data_[(ch * shape_[1] + r) * shape_[2] + c];
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  bool operator==(const Tensor& other) const {
    return shape_ == other.shape_ && data_ == other.data_;
  }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out(shape_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      out[i] = static_cast<U>(data_[i]);
    }
    return out;
  }

  void fill(T value) { data_.assign(data_.size(), value); }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  static std::size_t count(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return shape.empty() ? 0 : n;
  }

 private:
  std::vector<std::size_t> shape_;
  std::vector<T> data_;
};

inline std::string shape_string(const std::vector<std::size_t>& shape) {
  std::string s = "{";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(shape[i]);
  }
  return s + "}";
}

template <typename T, typename U>
void require_same_shape(const Tensor<T>& a, const Tensor<U>& b,
                        const char* what) {
  if (a.shape() != b.shape()) {
    throw ShapeError(std::string(what) + ": shape mismatch " +
                     shape_string(a.shape()) + " vs " +
                     shape_string(b.shape()));
  }
}

}  // namespace tcsm

#endif  // TCSM_TENSOR_HPP_
