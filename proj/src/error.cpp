#include "knotforge/error.hpp"

namespace knotforge {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonPrimitive: return "NonPrimitive";
    case Errc::ZeroClass: return "ZeroClass";
    case Errc::Overflow: return "Overflow";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::IncompatibleDecomposition: return "IncompatibleDecomposition";
    case Errc::TrivialBand: return "TrivialBand";
    case Errc::MissingPrecondition: return "MissingPrecondition";
    case Errc::InvalidGenus: return "InvalidGenus";
    case Errc::BadChi: return "BadChi";
    case Errc::BadGenus: return "BadGenus";
    case Errc::MalformedMap: return "MalformedMap";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::MalformedSample: return "MalformedSample";
    case Errc::NonPrimitiveBase: return "NonPrimitiveBase";
    case Errc::PreconditionUnmet: return "PreconditionUnmet";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace knotforge
