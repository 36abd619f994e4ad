#include "youngflat/error.hpp"

namespace youngflat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRemoval: return "InvalidRemoval";
    case ErrorKind::NotAStrip: return "NotAStrip";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::FormatError: return "FormatError";
  }
  return "Unknown";
}

}  // namespace youngflat
