#include "lamplighter/configuration.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace lamplighter {

std::string_view to_string(Step s) {
  switch (s) {
    case Step::Toggle: return "a";
    case Step::Right: return "t";
    case Step::Left: return "T";
  }
  return "?";
}

Configuration::Configuration(std::vector<Position> lamps, Position cursor)
    : lamps_(std::move(lamps)), cursor_(cursor) {
  std::sort(lamps_.begin(), lamps_.end());
  auto dup = std::adjacent_find(lamps_.begin(), lamps_.end());
  if (dup != lamps_.end()) {
    throw std::invalid_argument("duplicate lamp at position " + std::to_string(*dup));
  }
}

Configuration Configuration::from_sorted(std::vector<Position> lamps, Position cursor) {
  Configuration c;
  c.lamps_ = std::move(lamps);
  c.cursor_ = cursor;
  return c;
}

bool Configuration::is_lit(Position p) const {
  return std::binary_search(lamps_.begin(), lamps_.end(), p);
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
  // splitmix-style mixing over cursor and lamps
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(c.cursor());
  for (Position p : c.lamps()) {
    h ^= static_cast<std::uint64_t>(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  return static_cast<std::size_t>(h);
}

Configuration generator_element(Step s) {
  switch (s) {
    case Step::Toggle: return Configuration::from_sorted({0}, 0);
    case Step::Right: return Configuration::from_sorted({}, 1);
    case Step::Left: return Configuration::from_sorted({}, -1);
  }
  return {};
}

Configuration apply_step(const Configuration& c, Step s) {
  switch (s) {
    case Step::Right: return Configuration::from_sorted(c.lamps(), c.cursor() + 1);
    case Step::Left: return Configuration::from_sorted(c.lamps(), c.cursor() - 1);
    case Step::Toggle: break;
  }
  std::vector<Position> lamps = c.lamps();
  auto it = std::lower_bound(lamps.begin(), lamps.end(), c.cursor());
  if (it != lamps.end() && *it == c.cursor()) {
    lamps.erase(it);
  } else {
    lamps.insert(it, c.cursor());
  }
  return Configuration::from_sorted(std::move(lamps), c.cursor());
}

Configuration compose(const Configuration& g, const Configuration& h) {
  std::vector<Position> shifted;
  shifted.reserve(h.lamps().size());
  for (Position p : h.lamps()) shifted.push_back(p + g.cursor());

  std::vector<Position> lamps;
  lamps.reserve(g.lamps().size() + shifted.size());
  std::set_symmetric_difference(g.lamps().begin(), g.lamps().end(), shifted.begin(),
                                shifted.end(), std::back_inserter(lamps));
  return Configuration::from_sorted(std::move(lamps), g.cursor() + h.cursor());
}

Configuration invert(const Configuration& g) {
  std::vector<Position> lamps;
  lamps.reserve(g.lamps().size());
  for (Position p : g.lamps()) lamps.push_back(p - g.cursor());
  return Configuration::from_sorted(std::move(lamps), -g.cursor());
}

DyadicViews dyadic_views(const Configuration& c) {
  DyadicViews v;
  for (Position p : c.lamps()) {
    if (p >= 64 || p < -64) {
      throw std::overflow_error("lamp " + std::to_string(p) + " outside 64-bit dyadic range");
    }
    if (p >= 0) {
      v.plus |= std::uint64_t{1} << p;
    } else {
      v.minus |= std::uint64_t{1} << (-p - 1);
    }
  }
  return v;
}

}  // namespace lamplighter
