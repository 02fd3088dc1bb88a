#include "aiskin/common/error.hpp"

namespace aiskin {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::config: return "configuration error";
    case Errc::contract: return "contract violation";
    case Errc::numeric_fault: return "numeric fault";
    case Errc::corrupted: return "corrupted data";
    case Errc::incompatible: return "incompatible";
    case Errc::io: return "io error";
    case Errc::network: return "network error";
    case Errc::decode_bad_magic: return "decode: bad magic";
    case Errc::decode_bad_version: return "decode: unknown version";
    case Errc::decode_unknown_type: return "decode: unknown message type";
    case Errc::decode_oversize: return "decode: oversize payload";
    case Errc::decode_truncated: return "decode: truncated input";
    case Errc::decode_crc_mismatch: return "decode: crc mismatch";
  }
  return "unknown error";
}

}  // namespace aiskin
