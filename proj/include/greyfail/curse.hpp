#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "greyfail/syntax.hpp"

// Finite representation of the failure model: timed health rules per node or
// directed link with an eventually-constant or periodic tail. The default
// status everywhere is Up.

namespace greyfail {

enum class Health { Up, Down, Slow };

const char* to_string(Health h);

struct Subject {
  bool is_link = false;
  NodeId a;  // node id, or link source
  NodeId b;  // link destination (links are directional)

  bool operator==(const Subject&) const = default;
  auto operator<=>(const Subject&) const = default;
};

inline Subject node_subject(NodeId n) { return {false, std::move(n), {}}; }
inline Subject link_subject(NodeId src, NodeId dst) { return {true, std::move(src), std::move(dst)}; }

std::string to_string(const Subject& s);

struct TimeWindow {
  enum Kind { Interval, From, Periodic } kind = Interval;
  // Interval: [from, to] inclusive. From: [from, inf).
  TimeT from = 0, to = 0;
  // Periodic: active when t >= starting_at and
  // ((t - starting_at - offset) mod period) < active_len.
  TimeT offset = 0, active_len = 0, period = 1, starting_at = 0;

  bool contains(TimeT t) const;
};

struct CurseRule {
  Subject subject;
  Health status = Health::Down;
  TimeWindow window;
};

struct CurseSpec {
  std::vector<CurseRule> rules;
};

struct CurseValidationError {
  std::string what;
};

// Rejects period == 0, active_len > period, interval from > to, and
// overlapping windows for the same subject.
void validate(const CurseSpec& spec);

Health status_at(const CurseSpec& spec, TimeT t, const Subject& s);

// For all t >= stable_time and all subjects, status(t) == status(t + period).
struct CurseHorizon {
  TimeT stable_time = 0;
  TimeT period = 1;
};

CurseHorizon horizon(const CurseSpec& spec);

inline CurseSpec uncursed() { return {}; }

}  // namespace greyfail
