#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace aiskin {

// CRC-32 (IEEE 802.3, reflected 0xEDB88320), the same polynomial used by
// zlib. Streaming interface so large payloads can be checksummed without
// materializing a contiguous buffer.
class Crc32 {
 public:
  Crc32& update(const void* data, size_t len);
  Crc32& update(std::span<const uint8_t> data) { return update(data.data(), data.size()); }
  uint32_t value() const { return state_ ^ 0xFFFFFFFFu; }

 private:
  uint32_t state_ = 0xFFFFFFFFu;
};

inline uint32_t crc32(std::span<const uint8_t> data) {
  return Crc32().update(data).value();
}

}  // namespace aiskin
