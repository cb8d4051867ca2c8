#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lamplighter/configuration.hpp"

namespace lamplighter {

// Canonical single-line text form: {"cursor":<int>,"lamps":[<ascending ints>]}.
std::string encode(const Configuration& c);
nlohmann::json to_json(const Configuration& c);

// Strict decoding. Rejects malformed JSON, missing or unknown keys,
// non-integer values, and lamp lists that are unsorted or duplicated.
// Throws InputError; the position is a byte offset for syntax errors and a
// lamp index for list errors.
Configuration decode(std::string_view text);
Configuration from_json(const nlohmann::json& j);

}  // namespace lamplighter
