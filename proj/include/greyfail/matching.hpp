#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "greyfail/syntax.hpp"

// Pattern matching (Fig. 2): single pattern against a message, and selective
// receive over an ordered mailbox with the Rcv no-earlier-match condition.

namespace greyfail {

struct Substitution {
  std::map<std::string, Value> bindings;

  bool operator==(const Substitution&) const = default;
};

// VarA/VarN/Atom/Tuple rules. Fails on arity mismatch or atom mismatch.
// Pattern variables are assumed unique within the pattern.
std::optional<Substitution> match_pattern(const Pattern& p, const Message& m);

struct ReceiveMatch {
  std::size_t message_index = 0;
  std::size_t branch_index = 0;
  Substitution subst;
};

// Scans the mailbox in order; at the first message matching any branch,
// returns one match per matching branch. Empty result means the Timeout side
// condition holds. With erlang_order only the least branch index is kept.
std::vector<ReceiveMatch> select_receive(const std::vector<ReceiveBranch>& branches,
                                         const std::vector<Message>& mailbox,
                                         bool erlang_order = false);

struct SubstError {
  std::string what;
};

// P sigma: replaces bound variables in message and send-target positions.
// Receive patterns rebind; substitution stops for shadowed variables.
// Throws SubstError when a non-node value lands in a send-target position.
ProcessPtr apply_subst(const ProcessPtr& p, const Substitution& s);

Message apply_subst(const Message& m, const Substitution& s);

}  // namespace greyfail
