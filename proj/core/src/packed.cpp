#include "lamplighter/packed.hpp"

#include <vector>

namespace lamplighter {

std::optional<PackedConfig> PackedConfig::pack(const Configuration& c) {
  if (!in_window(c.cursor())) return std::nullopt;
  PackedConfig p;
  p.cursor = static_cast<std::int32_t>(c.cursor());
  for (Position lamp : c.lamps()) {
    if (!in_window(lamp)) return std::nullopt;
    p.lamps |= bit(lamp);
  }
  return p;
}

Configuration PackedConfig::unpack() const {
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(std::popcount(lamps)));
  for (std::uint64_t rest = lamps; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) - kOffset);
  }
  return Configuration::from_sorted(std::move(out), cursor);
}

}  // namespace lamplighter
