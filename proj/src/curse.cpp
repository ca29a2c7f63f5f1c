#include "greyfail/curse.hpp"

#include <algorithm>
#include <numeric>

namespace greyfail {

const char* to_string(Health h) {
  switch (h) {
    case Health::Up: return "up";
    case Health::Down: return "down";
    case Health::Slow: return "slow";
  }
  return "?";
}

std::string to_string(const Subject& s) {
  return s.is_link ? "link " + s.a + " -> " + s.b : "node " + s.a;
}

bool TimeWindow::contains(TimeT t) const {
  switch (kind) {
    case Interval:
      return t >= from && t <= to;
    case From:
      return t >= from;
    case Periodic: {
      if (t < starting_at) return false;
      TimeT r = (t - starting_at) % period;
      // window may wrap around the period boundary
      TimeT rel = (r + period - offset % period) % period;
      return rel < active_len;
    }
  }
  return false;
}

void validate(const CurseSpec& spec) {
  for (const auto& r : spec.rules) {
    if (r.window.kind == TimeWindow::Periodic) {
      if (r.window.period == 0) throw CurseValidationError{"periodic rule with period 0"};
      if (r.window.active_len > r.window.period)
        throw CurseValidationError{"periodic rule with active length exceeding its period"};
    }
    if (r.window.kind == TimeWindow::Interval && r.window.from > r.window.to)
      throw CurseValidationError{"interval window with from > to"};
  }
  // Disjointness per subject, checked by enumeration up to a horizon that
  // covers every finite endpoint plus two full periods of the joint cycle.
  auto h = horizon(spec);
  TimeT limit = h.stable_time + 2 * h.period + 2;
  for (std::size_t i = 0; i < spec.rules.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.rules.size(); ++j) {
      const auto& a = spec.rules[i];
      const auto& b = spec.rules[j];
      if (!(a.subject == b.subject)) continue;
      for (TimeT t = 0; t <= limit; ++t) {
        if (a.window.contains(t) && b.window.contains(t))
          throw CurseValidationError{"overlapping windows for " + to_string(a.subject) +
                                     " at time " + std::to_string(t)};
      }
    }
  }
}

Health status_at(const CurseSpec& spec, TimeT t, const Subject& s) {
  for (const auto& r : spec.rules) {
    if (r.subject == s && r.window.contains(t)) return r.status;
  }
  return Health::Up;
}

CurseHorizon horizon(const CurseSpec& spec) {
  CurseHorizon h{0, 1};
  for (const auto& r : spec.rules) {
    switch (r.window.kind) {
      case TimeWindow::Interval:
        h.stable_time = std::max(h.stable_time, r.window.to + 1);
        break;
      case TimeWindow::From:
        h.stable_time = std::max(h.stable_time, r.window.from);
        break;
      case TimeWindow::Periodic:
        h.stable_time = std::max(h.stable_time, r.window.starting_at);
        h.period = std::lcm(h.period, std::max<TimeT>(1, r.window.period));
        break;
    }
  }
  return h;
}

}  // namespace greyfail
