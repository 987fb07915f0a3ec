#pragma once

#include <stdexcept>
#include <string>

namespace qgeom {

enum class Errc {
  DimensionMismatch,
  ZeroVector,
  NonFinite,
  IndexOutOfRange,
  NotProduct,
  TooLarge,
  WrongShape,
  ShapeError,
  MissingVariable,
  ParseError,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NonFinite: return "NonFinite";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotProduct: return "NotProduct";
    case Errc::TooLarge: return "TooLarge";
    case Errc::WrongShape: return "WrongShape";
    case Errc::ShapeError: return "ShapeError";
    case Errc::MissingVariable: return "MissingVariable";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qgeom
