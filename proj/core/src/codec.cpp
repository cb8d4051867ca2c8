#include "lamplighter/codec.hpp"

#include <limits>
#include <vector>

#include "lamplighter/errors.hpp"

namespace lamplighter {

namespace {

Position as_integer(const nlohmann::json& v, const std::string& what, std::size_t position) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Position>::max())) {
      throw InputError(what + " out of range", position);
    }
    return v.get<Position>();
  }
  throw InputError(what + " is not an integer", position);
}

}  // namespace

nlohmann::json to_json(const Configuration& c) {
  return nlohmann::json{{"cursor", c.cursor()}, {"lamps", c.lamps()}};
}

std::string encode(const Configuration& c) { return to_json(c).dump(); }

Configuration from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("configuration must be a JSON object", 0);
  for (const auto& [key, value] : j.items()) {
    if (key != "cursor" && key != "lamps") throw InputError("unknown key '" + key + "'", 0);
  }
  if (!j.contains("cursor")) throw InputError("missing key 'cursor'", 0);
  if (!j.contains("lamps")) throw InputError("missing key 'lamps'", 0);
  const Position cursor = as_integer(j.at("cursor"), "cursor", 0);

  const auto& list = j.at("lamps");
  if (!list.is_array()) throw InputError("'lamps' must be an array", 0);
  std::vector<Position> lamps;
  lamps.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Position p = as_integer(list[i], "lamp", i);
    if (!lamps.empty()) {
      if (p == lamps.back()) throw InputError("duplicate lamp " + std::to_string(p), i);
      if (p < lamps.back()) throw InputError("lamps not ascending", i);
    }
    lamps.push_back(p);
  }
  return Configuration::from_sorted(std::move(lamps), cursor);
}

Configuration decode(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed configuration text: ") + e.what(), e.byte);
  }
  return from_json(j);
}

}  // namespace lamplighter
