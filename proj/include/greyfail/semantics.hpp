#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greyfail/curse.hpp"
#include "greyfail/matching.hpp"
#include "greyfail/syntax.hpp"

// Single-step reduction over cursed states. Instantaneous actions have
// priority over time actions (maximal progress): the whole system can take a
// time step only when no component has an instantaneous action.

namespace greyfail {

enum class Rule {
  Snd,
  Sched,
  Rcv,
  Checkpoint,
  Up,
  Down,
  MsgLoss,
  Sleep,
  Latency,
  Timeout,
  NLate,
  MsgLate,
  NDLate,
  Idle,  // state-preserving time passing (idle nodes, waiting messages)
};

const char* to_string(Rule r);

struct StepLabel {
  bool is_time = false;
  Rule rule = Rule::Idle;         // instantaneous steps only
  std::string locus;              // node id or message description
  std::vector<Rule> time_rules;   // componentwise rule multiset for time steps

  std::string pretty() const;
};

struct StepOptions {
  std::uint32_t latency = 1;       // the constant L
  bool erlang_order = false;       // restrict Rcv to the least branch index
  std::size_t unfold_cap = 512;    // Zeno guard for recursion unfolding
};

struct StuckTimeError {
  std::string what;
};

// All successors reachable by exactly one instantaneous action, canonical.
std::vector<std::pair<StepLabel, System>> instantaneous_steps(const System& sys,
                                                              const CurseSpec& curse,
                                                              const StepOptions& opts);

// The unique synchronous time step, or nullopt when an instantaneous action
// preempts it. Every component advances one unit simultaneously.
std::optional<std::pair<StepLabel, System>> time_step(const System& sys, const CurseSpec& curse,
                                                      const StepOptions& opts);

// Instantaneous steps when present, else the time step, else empty.
std::vector<std::pair<StepLabel, System>> successors(const System& sys, const CurseSpec& curse,
                                                     const StepOptions& opts);

}  // namespace greyfail
