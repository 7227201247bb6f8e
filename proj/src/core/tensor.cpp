#include "depthadapt/core/tensor.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "depthadapt/core/error.hpp"

namespace depthadapt {

namespace {
int64_t checked_numel(const std::vector<int64_t>& shape) {
  int64_t n = 1;
  for (int64_t d : shape) {
    if (d < 0) throw ShapeError("negative dimension in shape " + shape_str(shape));
    n *= d;
  }
  return n;
}
}  // namespace

Tensor::Tensor(std::vector<int64_t> shape) : shape_(std::move(shape)) {
  data_.assign(static_cast<size_t>(checked_numel(shape_)), 0.0f);
}

Tensor::Tensor(std::initializer_list<int64_t> shape) : Tensor(std::vector<int64_t>(shape)) {}

Tensor Tensor::zeros(std::vector<int64_t> shape) { return Tensor(std::move(shape)); }

Tensor Tensor::full(std::vector<int64_t> shape, float value) {
  Tensor t(std::move(shape));
  t.fill(value);
  return t;
}

void Tensor::fill(float value) {
  for (auto& v : data_) v = value;
}

Tensor Tensor::reshaped(std::vector<int64_t> shape) const {
  if (checked_numel(shape) != numel()) {
    throw ShapeError("reshape " + shape_str(shape_) + " -> " + shape_str(shape) +
                     " changes element count");
  }
  Tensor t;
  t.shape_ = std::move(shape);
  t.data_ = data_;
  return t;
}

void Tensor::add_(const Tensor& other) { axpy_(1.0f, other); }

void Tensor::axpy_(float alpha, const Tensor& other) {
  if (!same_shape(other)) {
    throw ShapeError("elementwise op on mismatched shapes " + shape_str(shape_) + " vs " +
                     shape_str(other.shape_));
  }
  const float* src = other.data();
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += alpha * src[i];
}

void Tensor::scale_(float alpha) {
  for (auto& v : data_) v *= alpha;
}

bool Tensor::all_finite() const {
  for (float v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string shape_str(const std::vector<int64_t>& shape) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ", ";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

bool bits_equal(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b)) return false;
  if (a.numel() == 0) return true;
  return std::memcmp(a.data(), b.data(), sizeof(float) * static_cast<size_t>(a.numel())) == 0;
}

uint64_t hash_bytes(const void* data, size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = 0xcbf29ce484222325ULL;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t hash_tensor(const Tensor& t) {
  uint64_t h = hash_bytes(t.data(), sizeof(float) * static_cast<size_t>(t.numel()));
  for (int64_t d : t.shape()) h = hash_bytes(&d, sizeof(d)) ^ (h * 0x9e3779b97f4a7c15ULL);
  return h;
}

}  // namespace depthadapt
