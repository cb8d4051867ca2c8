#include "lamplighter/cli/walk_io.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lamplighter/codec.hpp"
#include "lamplighter/errors.hpp"

namespace lamplighter::cli {

using nlohmann::ordered_json;

void write_walk(std::ostream& out, const WalkIdentity& id, const Walk& walk) {
  ordered_json header;
  header["kind"] = std::string(to_string(id.kind));
  header["n"] = id.n ? ordered_json(*id.n) : ordered_json(nullptr);
  header["steps"] = walk.step_count();
  out << header.dump() << '\n';
  for (const auto& v : walk.vertices()) out << encode(v) << '\n';
  ordered_json marks = ordered_json::object();
  for (const auto& m : walk.milestones()) marks[m.label] = m.index;
  ordered_json trailer;
  trailer["milestones"] = std::move(marks);
  out << trailer.dump() << '\n';
}

namespace {

WalkIdentity parse_header(const std::string& line) {
  const auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.size() != 3 || !j.contains("kind") ||
      !j.contains("n") || !j.contains("steps")) {
    throw InputError("walk header must be {\"kind\",\"n\",\"steps\"}", 1);
  }
  if (!j["kind"].is_string() || !j["steps"].is_number_unsigned() ||
      !(j["n"].is_null() || j["n"].is_number_integer())) {
    throw InputError("walk header has mistyped fields", 1);
  }
  WalkIdentity id;
  try {
    id.kind = parse_path_kind(j["kind"].get<std::string>());
  } catch (const std::invalid_argument&) {
    throw InputError("unknown path kind in walk header", 1);
  }
  if (!j["n"].is_null()) id.n = j["n"].get<int>();
  id.steps = j["steps"].get<std::size_t>();
  return id;
}

}  // namespace

LoadedWalk read_walk(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty walk file", 1);
  const WalkIdentity id = parse_header(line);

  std::vector<Configuration> vertices;
  vertices.reserve(id.steps + 1);
  std::size_t line_no = 1;
  while (vertices.size() < id.steps + 1) {
    if (!std::getline(in, line)) throw InputError("walk file truncated", line_no + 1);
    ++line_no;
    try {
      vertices.push_back(decode(line));
    } catch (const InputError& e) {
      throw InputError(std::string("bad vertex: ") + e.what(), line_no);
    }
  }

  std::vector<Step> steps;
  steps.reserve(id.steps);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const auto s = step_between(vertices[i], vertices[i + 1]);
    if (!s) throw InputError("consecutive vertices are not adjacent", i + 3);
    steps.push_back(*s);
  }
  Walk walk(vertices.front(), std::move(steps));

  if (!std::getline(in, line)) throw InputError("missing milestones trailer", line_no + 1);
  ++line_no;
  const auto trailer = nlohmann::ordered_json::parse(line, nullptr, false);
  if (trailer.is_discarded() || !trailer.is_object() || trailer.size() != 1 ||
      !trailer.contains("milestones") || !trailer["milestones"].is_object()) {
    throw InputError("malformed milestones trailer", line_no);
  }
  for (const auto& [label, index] : trailer["milestones"].items()) {
    if (!index.is_number_unsigned() || index.get<std::size_t>() > id.steps) {
      throw InputError("milestone index out of range", line_no);
    }
    try {
      walk.add_milestone(label, index.get<std::size_t>());
    } catch (const std::exception&) {
      throw InputError("duplicate milestone label", line_no);
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty()) throw InputError("trailing data after milestones", line_no);
  }
  return {id, std::move(walk)};
}

}  // namespace lamplighter::cli
