#include "lamplighter/path_spec.hpp"

#include <stdexcept>

namespace lamplighter {

std::string_view to_string(PathKind kind) {
  switch (kind) {
    case PathKind::N: return "N";
    case PathKind::R: return "R";
    case PathKind::I: return "I";
    case PathKind::C: return "C";
  }
  return "?";
}

PathKind parse_path_kind(std::string_view text) {
  if (text == "N") return PathKind::N;
  if (text == "R") return PathKind::R;
  if (text == "I") return PathKind::I;
  if (text == "C") return PathKind::C;
  throw std::invalid_argument("unknown path kind '" + std::string(text) + "'");
}

std::string PathSpec::label() const {
  std::string out(to_string(kind));
  if (finite()) out += std::to_string(n);
  return out;
}

}  // namespace lamplighter
