#pragma once

#include <vector>

#include "aiskin/core/types.hpp"

namespace aiskin {

// Bilinear resize with pixel-center alignment. Returns a copy when the
// target size already matches. Metadata fields carry over unchanged.
ImageSample resize_bilinear(const ImageSample& src, uint16_t width, uint16_t height);

// Mean BT.601 luminance (0.299 R + 0.587 G + 0.114 B) over the center crop
// spanning the middle 50% in each dimension.
double center_crop_mean_luminance(const ImageSample& sample);

// Pixels scaled to [-0.5, 0.5], interleaved RGB converted to planar CHW
// order as the network input expects.
std::vector<float> to_network_input(const ImageSample& sample);

}  // namespace aiskin
