#include "depthadapt/core/types.hpp"

#include <algorithm>
#include <cmath>

#include "depthadapt/core/error.hpp"

namespace depthadapt {

void ImageSample::validate() const {
  if (pixels.ndim() != 3 || pixels.dim(2) != 3) {
    throw ShapeError("ImageSample.pixels must be HxWx3, got " + shape_str(pixels.shape()));
  }
  if (height() <= 0 || width() <= 0) throw ShapeError("ImageSample: empty spatial extent");
  for (float v : pixels.flat()) {
    if (!(v >= 0.0f && v <= 1.0f)) {
      throw ArgumentError("ImageSample: intensity " + std::to_string(v) + " outside [0, 1]");
    }
  }
}

DepthMap DepthMap::full_valid(Tensor depths, std::optional<float> max_depth) {
  DepthMap m;
  m.valid_mask.assign(static_cast<size_t>(depths.numel()), 1);
  m.depths = std::move(depths);
  m.max_depth = max_depth;
  return m;
}

int64_t DepthMap::count_valid() const {
  return std::count(valid_mask.begin(), valid_mask.end(), uint8_t{1});
}

void DepthMap::clip_to_max() {
  if (!max_depth) return;
  const float cap = *max_depth;
  for (float& v : depths.flat()) v = std::clamp(v, 0.0f, cap);
}

void DepthMap::validate() const {
  if (depths.ndim() != 3 || depths.dim(2) != 1) {
    throw ShapeError("DepthMap.depths must be HxWx1, got " + shape_str(depths.shape()));
  }
  if (valid_mask.size() != static_cast<size_t>(depths.numel())) {
    throw ShapeError("DepthMap: valid_mask size does not match depth extent");
  }
  for (int64_t i = 0; i < depths.numel(); ++i) {
    const float d = depths[i];
    if (valid_at(i) && !(d >= 0.0f)) {
      throw ArgumentError("DepthMap: negative depth on valid pixel");
    }
    if (max_depth && valid_at(i) && d > *max_depth) {
      throw ArgumentError("DepthMap: depth above max_depth; clip_to_max first");
    }
  }
}

Tensor images_to_nchw(const std::vector<const ImageSample*>& samples) {
  if (samples.empty()) return Tensor({0, 3, 0, 0});
  const int64_t h = samples[0]->height();
  const int64_t w = samples[0]->width();
  Tensor out({static_cast<int64_t>(samples.size()), 3, h, w});
  float* dst = out.data();
  for (size_t n = 0; n < samples.size(); ++n) {
    const ImageSample& s = *samples[n];
    if (s.height() != h || s.width() != w) {
      throw ShapeError("images_to_nchw: mixed resolutions in batch");
    }
    const float* src = s.pixels.data();  // HWC
    for (int64_t c = 0; c < 3; ++c) {
      float* plane = dst + (static_cast<int64_t>(n) * 3 + c) * h * w;
      for (int64_t i = 0; i < h * w; ++i) plane[i] = src[i * 3 + c];
    }
  }
  return out;
}

Tensor images_to_nchw(const std::vector<ImageSample>& samples) {
  std::vector<const ImageSample*> ptrs;
  ptrs.reserve(samples.size());
  for (const auto& s : samples) ptrs.push_back(&s);
  return images_to_nchw(ptrs);
}

std::vector<DepthMap> nchw_to_depth_maps(const Tensor& batch) {
  if (batch.ndim() != 4 || batch.dim(1) != 1) {
    throw ShapeError("nchw_to_depth_maps expects {N,1,H,W}, got " + shape_str(batch.shape()));
  }
  const int64_t n = batch.dim(0), h = batch.dim(2), w = batch.dim(3);
  std::vector<DepthMap> maps;
  maps.reserve(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    Tensor d({h, w, 1});
    const float* src = batch.data() + i * h * w;
    std::copy(src, src + h * w, d.data());
    maps.push_back(DepthMap::full_valid(std::move(d)));
  }
  return maps;
}

Tensor depths_to_nchw(const std::vector<const DepthMap*>& maps) {
  if (maps.empty()) return Tensor({0, 1, 0, 0});
  const int64_t h = maps[0]->height();
  const int64_t w = maps[0]->width();
  Tensor out({static_cast<int64_t>(maps.size()), 1, h, w});
  for (size_t n = 0; n < maps.size(); ++n) {
    if (maps[n]->height() != h || maps[n]->width() != w) {
      throw ShapeError("depths_to_nchw: mixed resolutions in batch");
    }
    std::copy(maps[n]->depths.data(), maps[n]->depths.data() + h * w,
              out.data() + static_cast<int64_t>(n) * h * w);
  }
  return out;
}

}  // namespace depthadapt
