#include "lamplighter/constructions.hpp"

#include <bit>
#include <string>

#include "lamplighter/errors.hpp"

namespace lamplighter {

namespace {

bool bit_of(std::uint64_t n, std::int64_t q) {
  return q >= 0 && q < 64 && ((n >> q) & 1U) != 0;
}

void repeat(std::vector<Step>& out, Step s, std::size_t count) { out.insert(out.end(), count, s); }

void check_quasi_n(int n) {
  if (n < 1) throw std::invalid_argument("quasi interval/circle needs n >= 1");
  if (n > kMaxQuasiN) {
    throw ResourceLimitError("quasi interval/circle n = " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxQuasiN));
  }
}

// Concatenates segments, cancels immediate backtracks, and reports the vertex
// index where each segment boundary ends up after cancellation.
struct Assembled {
  std::vector<Step> steps;
  std::vector<std::size_t> junctions;
};

Assembled assemble(std::initializer_list<const std::vector<Step>*> segments) {
  Assembled out;
  std::size_t seg = 0;
  for (const auto* segment : segments) {
    for (Step s : *segment) {
      if (!out.steps.empty() && out.steps.back() == inverse(s)) {
        out.steps.pop_back();
        for (auto& j : out.junctions) j = std::min(j, out.steps.size());
      } else {
        out.steps.push_back(s);
      }
    }
    if (++seg < segments.size()) out.junctions.push_back(out.steps.size());
  }
  return out;
}

}  // namespace

unsigned trailing_ones(std::uint64_t n) { return static_cast<unsigned>(std::countr_one(n)); }

Configuration stage_config(std::uint64_t n) {
  std::vector<Position> lamps;
  for (std::uint64_t rest = n; rest != 0; rest &= rest - 1) {
    lamps.push_back(std::countr_zero(rest));
  }
  return Configuration::from_sorted(std::move(lamps), 0);
}

void append_stage_steps(std::uint64_t n, std::vector<Step>& out) {
  if (n >= (std::uint64_t{1} << 62)) throw std::out_of_range("stage index too large");
  const std::int64_t k = trailing_ones(n);
  if (k == 0) {
    out.push_back(Step::Toggle);
    return;
  }
  // A: out to the marker.
  repeat(out, Step::Left, static_cast<std::size_t>(k));
  out.push_back(Step::Toggle);
  // B: copy lamps k+1..2k-1 onto -k+1..-1 on the way back.
  for (std::int64_t p = -k + 1; p <= -1; ++p) {
    out.push_back(Step::Right);
    if (bit_of(n, p + 2 * k)) out.push_back(Step::Toggle);
  }
  out.push_back(Step::Right);
  // C: carry.
  for (std::int64_t p = 0; p < k; ++p) {
    out.push_back(Step::Toggle);
    out.push_back(Step::Right);
  }
  out.push_back(Step::Toggle);
  // D: clear the negative side and come home.
  repeat(out, Step::Left, static_cast<std::size_t>(k));
  for (std::int64_t p = -1; p >= -k; --p) {
    out.push_back(Step::Left);
    if (p == -k || bit_of(n, p + 2 * k)) out.push_back(Step::Toggle);
  }
  repeat(out, Step::Right, static_cast<std::size_t>(k));
}

Walk stage_walk(std::uint64_t n) {
  std::vector<Step> steps;
  append_stage_steps(n, steps);
  return Walk(stage_config(n), std::move(steps));
}

Walk half_quasi_line(std::size_t num_steps) {
  std::vector<Step> steps;
  std::vector<std::size_t> starts;
  std::uint64_t n = 0;
  while (steps.size() < num_steps) {
    starts.push_back(steps.size());
    append_stage_steps(n++, steps);
  }
  if (steps.size() == num_steps) starts.push_back(num_steps);
  steps.resize(num_steps);

  Walk walk(identity(), std::move(steps));
  for (std::size_t i = 0; i < starts.size(); ++i) {
    walk.add_milestone("c" + std::to_string(i), starts[i]);
  }
  return walk;
}

Configuration ray_vertex(std::size_t i) {
  std::vector<Position> lamps;
  lamps.reserve(i);
  const auto depth = static_cast<Position>(i);
  for (Position p = -depth; p <= -1; ++p) lamps.push_back(p);
  return Configuration::from_sorted(std::move(lamps), -depth);
}

Walk quasi_line(std::size_t neg_len, std::size_t pos_steps) {
  std::vector<Step> steps;
  steps.reserve(2 * neg_len + pos_steps);
  for (std::size_t i = neg_len; i >= 1; --i) {
    steps.push_back(Step::Toggle);
    steps.push_back(Step::Right);
  }
  const Walk positive = half_quasi_line(pos_steps);
  steps.insert(steps.end(), positive.steps().begin(), positive.steps().end());

  Walk walk(ray_vertex(neg_len), std::move(steps));
  for (std::size_t i = neg_len; i >= 1; --i) {
    walk.add_milestone("R-" + std::to_string(i), 2 * (neg_len - i));
  }
  const std::size_t origin = 2 * neg_len;
  for (const auto& m : positive.milestones()) walk.add_milestone(m.label, origin + m.index);
  return walk;
}

QuasiIntervalParts quasi_interval_parts(int n) {
  check_quasi_n(n);
  QuasiIntervalParts parts;
  parts.n = n;
  const std::uint64_t target = (std::uint64_t{1} << (2 * n + 1)) - 1;
  for (std::uint64_t m = 0; m < target; ++m) append_stage_steps(m, parts.first);
  for (int p = 0; p < 2 * n; ++p) {
    parts.bridge.push_back(Step::Toggle);
    parts.bridge.push_back(Step::Right);
  }
  parts.bridge.push_back(Step::Toggle);
  parts.mirrored = mirror_walk(parts.first);
  return parts;
}

Walk quasi_interval(int n) {
  const QuasiIntervalParts parts = quasi_interval_parts(n);
  Assembled a = assemble({&parts.first, &parts.bridge, &parts.mirrored});
  Walk walk(identity(), std::move(a.steps));
  walk.add_milestone("I1_end", a.junctions[0]);
  walk.add_milestone("I2_end", a.junctions[1]);
  return walk;
}

std::vector<Step> circle_closing(int n) {
  check_quasi_n(n);
  using enum Step;
  if (n == 1) {
    return {Right, Right, Toggle, Left, Left,  Left,   Toggle, Left, Toggle, Right,
            Right, Toggle, Right, Right, Toggle, Left, Left,   Left, Left};
  }
  const auto width = static_cast<std::size_t>(2 * n);
  const std::size_t marker_offset = width + 1;  // marker at 4n + 1
  constexpr std::size_t shield = 3;
  std::vector<Step> out;
  repeat(out, Right, marker_offset);
  out.push_back(Toggle);
  repeat(out, Left, marker_offset);
  for (std::size_t p = width; p > 0; --p) {
    out.push_back(Toggle);
    out.push_back(Left);
  }
  out.push_back(Toggle);
  for (std::size_t j = 0; j < shield; ++j) {
    out.push_back(Left);
    out.push_back(Toggle);
  }
  repeat(out, Right, shield + width + marker_offset);
  out.push_back(Toggle);
  repeat(out, Left, shield + width + marker_offset);
  for (std::size_t j = shield; j > 1; --j) {
    out.push_back(Toggle);
    out.push_back(Right);
  }
  out.push_back(Toggle);
  out.push_back(Right);
  return out;
}

Walk quasi_circle(int n) {
  const QuasiIntervalParts parts = quasi_interval_parts(n);
  const std::vector<Step> closing = circle_closing(n);
  Assembled a = assemble({&parts.first, &parts.bridge, &parts.mirrored, &closing});
  Walk walk(identity(), std::move(a.steps));
  walk.add_milestone("I1_end", a.junctions[0]);
  walk.add_milestone("I2_end", a.junctions[1]);
  walk.add_milestone("I3_end", a.junctions[2]);
  return walk;
}

ProbeSet probes(int n) {
  if (n < 1) throw std::invalid_argument("probes need n >= 1");
  ProbeSet set;
  set.n = n;
  std::vector<Position> run;
  for (Position p = 0; p < 2 * n; ++p) run.push_back(p);
  set.a_n = Configuration::from_sorted(run, n);
  run.push_back(2 * n);
  set.x_n = Configuration::from_sorted(std::move(run), n);
  set.b_n = Configuration::from_sorted({}, -n);
  set.y_n = set.b_n;
  return set;
}

}  // namespace lamplighter
