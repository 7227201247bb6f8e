#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "depthadapt/core/tensor.hpp"

namespace depthadapt {

/// RGB image, H x W x 3, intensities in [0, 1].
struct ImageSample {
  Tensor pixels;  // shape {H, W, 3}
  std::string source_id;

  int64_t height() const { return pixels.dim(0); }
  int64_t width() const { return pixels.dim(1); }

  /// Throws ShapeError / ArgumentError when shape or range is violated.
  void validate() const;
};

/// Metric depth map, H x W, meters. valid_mask marks pixels with ground
/// truth; rendered or predicted maps are fully valid.
struct DepthMap {
  Tensor depths;                    // shape {H, W, 1}
  std::vector<uint8_t> valid_mask;  // H*W, row-major; 1 = valid
  std::optional<float> max_depth;   // meters, when a dataset defines a cap

  int64_t height() const { return depths.dim(0); }
  int64_t width() const { return depths.dim(1); }

  static DepthMap full_valid(Tensor depths, std::optional<float> max_depth = std::nullopt);

  bool valid_at(int64_t idx) const { return valid_mask[static_cast<size_t>(idx)] != 0; }
  int64_t count_valid() const;

  /// Clamp depths into [0, max_depth] (no-op when max_depth is unset).
  /// Idempotent by construction.
  void clip_to_max();

  void validate() const;
};

/// Encoder feature block, C x h x w.
struct LatentCode {
  Tensor values;  // shape {C, h, w}
};

/// Stack image samples into an NCHW batch; all samples must share H, W.
Tensor images_to_nchw(const std::vector<const ImageSample*>& samples);
Tensor images_to_nchw(const std::vector<ImageSample>& samples);

/// Split an {N,1,H,W} prediction batch into fully-valid depth maps.
std::vector<DepthMap> nchw_to_depth_maps(const Tensor& batch);

/// Depth maps -> {N,1,H,W} tensor (values only; masks are handled by callers).
Tensor depths_to_nchw(const std::vector<const DepthMap*>& maps);

}  // namespace depthadapt
