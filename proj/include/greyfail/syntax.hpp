#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

// Abstract syntax of processes and systems, structural congruence normal
// forms, the time-of-a-system partial function, initiality and the
// non-instantaneity predicate.

namespace greyfail {

using TimeT = std::uint64_t;

enum class ValueKind { Atom, Node, Var };

struct Value {
  ValueKind kind = ValueKind::Atom;
  std::string name;

  bool operator==(const Value&) const = default;
  auto operator<=>(const Value&) const = default;
};

inline Value atom(std::string n) { return {ValueKind::Atom, std::move(n)}; }
inline Value node_ref(std::string n) { return {ValueKind::Node, std::move(n)}; }
inline Value var_ref(std::string n) { return {ValueKind::Var, std::move(n)}; }

// A message is an ordered tuple of values; ground once it is on a link or in
// a mailbox.
using Message = std::vector<Value>;

bool is_ground(const Message& m);

struct PatternElem {
  bool is_var = false;
  std::string name;

  bool operator==(const PatternElem&) const = default;
  auto operator<=>(const PatternElem&) const = default;
};

using Pattern = std::vector<PatternElem>;

using NodeId = std::string;

struct Process;
using ProcessPtr = std::shared_ptr<const Process>;

// A send target is either a node id or a pattern variable awaiting
// substitution.
struct SendTarget {
  bool is_var = false;
  std::string name;

  bool operator==(const SendTarget&) const = default;
  auto operator<=>(const SendTarget&) const = default;
};

struct SendBranch {
  SendTarget target;
  Message msg;
  ProcessPtr cont;
};

struct ReceiveBranch {
  Pattern pat;
  ProcessPtr cont;
};

enum class ProcKind { Send, Receive, Sleep, Save, Fix, RecVar, Inact };

// Immutable process term; shared substructure keeps state copies cheap.
struct Process {
  ProcKind kind = ProcKind::Inact;
  std::vector<SendBranch> sends;        // Send
  std::vector<ReceiveBranch> receives;  // Receive
  ProcessPtr timeout;                   // Receive: one-unit timeout handler
  ProcessPtr cont;                      // Sleep, Save, Fix body
  std::string var;                      // Fix binder / RecVar name
};

ProcessPtr make_inact();
ProcessPtr make_sleep(ProcessPtr cont);
ProcessPtr make_save(ProcessPtr cont);
ProcessPtr make_fix(std::string var, ProcessPtr body);
ProcessPtr make_recvar(std::string var);
ProcessPtr make_send(std::vector<SendBranch> branches);
ProcessPtr make_receive(std::vector<ReceiveBranch> branches, ProcessPtr timeout);

bool proc_equal(const ProcessPtr& a, const ProcessPtr& b);

// Deterministic structural serialization; doubles as the canonical sort key
// and the hashable state representation.
std::string serialize(const ProcessPtr& p);
std::string serialize(const Message& m);
std::string serialize(const Pattern& p);

// System components (Fig. 1). Node ids are unique across Node/CrashedNode.
struct NodeState {
  NodeId id;
  ProcessPtr proc;
  std::vector<Message> mailbox;  // ordered, delivery order matters
  TimeT time = 0;
  ProcessPtr checkpoint;
};

struct CrashedNode {
  NodeId id;
  TimeT time = 0;
  ProcessPtr checkpoint;
};

struct FloatingMsg {
  NodeId src, dst;
  Message msg;
  TimeT time = 0;
};

struct LatentMsg {
  std::uint32_t latency = 1;  // >= 1; latency 0 is a FloatingMsg
  NodeId src, dst;
  Message msg;
  TimeT time = 0;
};

using Component = std::variant<NodeState, CrashedNode, FloatingMsg, LatentMsg>;

struct System {
  std::vector<Component> parts;  // canonical form: sorted by serialization
};

std::string serialize(const Component& c);
std::string serialize(const System& s);

// Congruence-class representative: 0-latency latent messages rewritten to
// floating, components sorted by their serialization key. Idempotent.
System canonicalize(System s);

// time(R): wildcard for the empty system, the common time stamp otherwise,
// undefined when two components disagree.
struct TimeOf {
  enum Kind { Wildcard, Defined, Undefined } kind = Wildcard;
  TimeT t = 0;
};

TimeOf time_of(const System& s);

inline bool time_coherent(const System& s) { return time_of(s).kind != TimeOf::Undefined; }

struct SystemConfig {
  std::vector<NodeId> nodes;                    // the fixed node set
  std::map<NodeId, ProcessPtr> initial_proc;    // Gamma
  std::map<NodeId, ProcessPtr> initial_chkpt;   // Sigma
  std::uint32_t latency = 1;                    // L >= 1
};

System initial_system(const SystemConfig& cfg);

bool is_initial(const System& s, const SystemConfig& cfg);

// ninsta(P): conjunction over send/receive branch continuations, looks
// through fix bodies, true at sleep, false at recursion variables and 0.
// The receive timeout handler is exempt: it only runs after a time step.
bool non_instantaneous(const ProcessPtr& p);

// Unfolds top-level fix binders until the head is not Fix. Throws ZenoError
// past `cap` unfoldings (mu t.t and friends).
struct ZenoError {
  std::string what;
};

ProcessPtr unfold_head(ProcessPtr p, std::size_t cap = 512);

// Substitutes the whole fix term for its recursion variable, respecting
// shadowing by inner binders of the same name.
ProcessPtr subst_recvar(const ProcessPtr& body, const std::string& var, const ProcessPtr& repl);

std::set<NodeId> node_ids_of(const System& s);

}  // namespace greyfail
