#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aiskin {

// Error categories surfaced across module boundaries. Decode failures get
// distinct codes so callers can tell corruption from protocol mismatch.
enum class Errc : uint8_t {
  invalid_argument,
  config,
  contract,
  numeric_fault,
  corrupted,
  incompatible,
  io,
  network,
  decode_bad_magic,
  decode_bad_version,
  decode_unknown_type,
  decode_oversize,
  decode_truncated,
  decode_crc_mismatch,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Connection dropped mid-send; carries how far the transfer got.
class TransmissionError : public Error {
 public:
  TransmissionError(uint64_t bytes_sent, const std::string& message)
      : Error(Errc::network, message), bytes_sent_(bytes_sent) {}

  uint64_t bytes_sent() const { return bytes_sent_; }

 private:
  uint64_t bytes_sent_;
};

}  // namespace aiskin
