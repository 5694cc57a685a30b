#include "kcore/error.hpp"

namespace kcore {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::MissingEdge: return "MissingEdge";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::DifferentBuckets: return "DifferentBuckets";
    case Errc::InternalInvariant: return "InternalInvariant";
    case Errc::CheckFailed: return "CheckFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace kcore
