#include "aiskin/common/crc32.hpp"

#include <array>

namespace aiskin {
namespace {

std::array<uint32_t, 256> make_table() {
  std::array<uint32_t, 256> table{};
  for (uint32_t i = 0; i < 256; ++i) {
    uint32_t c = i;
    for (int k = 0; k < 8; ++k) {
      c = (c & 1u) ? 0xEDB88320u ^ (c >> 1) : (c >> 1);
    }
    table[i] = c;
  }
  return table;
}

const std::array<uint32_t, 256>& table() {
  static const std::array<uint32_t, 256> t = make_table();
  return t;
}

}  // namespace

Crc32& Crc32::update(const void* data, size_t len) {
  const auto* p = static_cast<const uint8_t*>(data);
  const auto& t = table();
  uint32_t c = state_;
  for (size_t i = 0; i < len; ++i) {
    c = t[(c ^ p[i]) & 0xFFu] ^ (c >> 8);
  }
  state_ = c;
  return *this;
}

}  // namespace aiskin
