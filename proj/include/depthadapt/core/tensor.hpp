#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace depthadapt {

/// Dense row-major float32 n-d array. All framework arithmetic is 32-bit by
/// contract; double appears only in test-mode reductions and oracles.
///
/// Tensors are plain value objects: copy copies the buffer, moves are cheap,
/// and a const Tensor is safe to share across threads.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int64_t> shape);
  Tensor(std::initializer_list<int64_t> shape);

  static Tensor zeros(std::vector<int64_t> shape);
  static Tensor full(std::vector<int64_t> shape, float value);

  bool empty() const { return data_.empty(); }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  int ndim() const { return static_cast<int>(shape_.size()); }
  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t dim(int i) const { return shape_.at(static_cast<size_t>(i)); }

  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }
  std::span<float> flat() { return {data_.data(), data_.size()}; }
  std::span<const float> flat() const { return {data_.data(), data_.size()}; }

  float& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  float operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  void fill(float value);
  void zero() { fill(0.0f); }

  /// Reinterpret with a new shape of identical element count.
  Tensor reshaped(std::vector<int64_t> shape) const;

  /// this += other (shapes must match).
  void add_(const Tensor& other);
  /// this += alpha * other.
  void axpy_(float alpha, const Tensor& other);
  void scale_(float alpha);

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;

 private:
  std::vector<int64_t> shape_;
  std::vector<float> data_;
};

/// Human-readable "[a, b, c]" form for error messages.
std::string shape_str(const std::vector<int64_t>& shape);

/// True when both tensors have identical shape and bit-identical contents.
bool bits_equal(const Tensor& a, const Tensor& b);

/// FNV-1a over the raw bytes; used to prove parameters untouched.
uint64_t hash_bytes(const void* data, size_t len);
uint64_t hash_tensor(const Tensor& t);

}  // namespace depthadapt
