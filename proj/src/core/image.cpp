#include "aiskin/core/image.hpp"

#include <algorithm>
#include <cmath>

namespace aiskin {

ImageSample resize_bilinear(const ImageSample& src, uint16_t width, uint16_t height) {
  src.validate();
  if (width < 1 || height < 1) throw Error(Errc::invalid_argument, "resize target must be positive");
  if (src.width == width && src.height == height) return src;

  ImageSample dst = src;
  dst.width = width;
  dst.height = height;
  dst.pixels.assign(static_cast<size_t>(width) * height * 3, 0);

  const double sx = static_cast<double>(src.width) / width;
  const double sy = static_cast<double>(src.height) / height;
  for (uint16_t y = 0; y < height; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    fy = std::clamp(fy, 0.0, static_cast<double>(src.height - 1));
    const size_t y0 = static_cast<size_t>(fy);
    const size_t y1 = std::min<size_t>(y0 + 1, src.height - 1);
    const double wy = fy - static_cast<double>(y0);
    for (uint16_t x = 0; x < width; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      fx = std::clamp(fx, 0.0, static_cast<double>(src.width - 1));
      const size_t x0 = static_cast<size_t>(fx);
      const size_t x1 = std::min<size_t>(x0 + 1, src.width - 1);
      const double wx = fx - static_cast<double>(x0);
      for (size_t c = 0; c < 3; ++c) {
        const double p00 = src.pixels[(y0 * src.width + x0) * 3 + c];
        const double p01 = src.pixels[(y0 * src.width + x1) * 3 + c];
        const double p10 = src.pixels[(y1 * src.width + x0) * 3 + c];
        const double p11 = src.pixels[(y1 * src.width + x1) * 3 + c];
        const double v = p00 * (1 - wx) * (1 - wy) + p01 * wx * (1 - wy) +
                         p10 * (1 - wx) * wy + p11 * wx * wy;
        dst.pixels[(static_cast<size_t>(y) * width + x) * 3 + c] =
            static_cast<uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
      }
    }
  }
  return dst;
}

double center_crop_mean_luminance(const ImageSample& sample) {
  sample.validate();
  const size_t x0 = sample.width / 4;
  const size_t y0 = sample.height / 4;
  const size_t x1 = x0 + sample.width / 2;
  const size_t y1 = y0 + sample.height / 2;
  double sum = 0.0;
  size_t count = 0;
  for (size_t y = y0; y < y1; ++y) {
    for (size_t x = x0; x < x1; ++x) {
      const uint8_t* px = &sample.pixels[(y * sample.width + x) * 3];
      sum += 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
      ++count;
    }
  }
  return count ? sum / static_cast<double>(count) : 0.0;
}

std::vector<float> to_network_input(const ImageSample& sample) {
  sample.validate();
  const size_t plane = static_cast<size_t>(sample.width) * sample.height;
  std::vector<float> out(plane * 3);
  for (size_t i = 0; i < plane; ++i) {
    for (size_t c = 0; c < 3; ++c) {
      out[c * plane + i] = static_cast<float>(sample.pixels[i * 3 + c]) / 255.0f - 0.5f;
    }
  }
  return out;
}

}  // namespace aiskin
