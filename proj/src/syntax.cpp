#include "greyfail/syntax.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace greyfail {

bool is_ground(const Message& m) {
  for (const auto& v : m)
    if (v.kind == ValueKind::Var) return false;
  return true;
}

ProcessPtr make_inact() {
  static const ProcessPtr inact = std::make_shared<Process>(Process{ProcKind::Inact});
  return inact;
}

ProcessPtr make_sleep(ProcessPtr cont) {
  auto p = std::make_shared<Process>();
  p->kind = ProcKind::Sleep;
  p->cont = std::move(cont);
  return p;
}

ProcessPtr make_save(ProcessPtr cont) {
  auto p = std::make_shared<Process>();
  p->kind = ProcKind::Save;
  p->cont = std::move(cont);
  return p;
}

ProcessPtr make_fix(std::string var, ProcessPtr body) {
  auto p = std::make_shared<Process>();
  p->kind = ProcKind::Fix;
  p->var = std::move(var);
  p->cont = std::move(body);
  return p;
}

ProcessPtr make_recvar(std::string var) {
  auto p = std::make_shared<Process>();
  p->kind = ProcKind::RecVar;
  p->var = std::move(var);
  return p;
}

ProcessPtr make_send(std::vector<SendBranch> branches) {
  if (branches.empty()) throw std::invalid_argument("send choice needs at least one branch");
  auto p = std::make_shared<Process>();
  p->kind = ProcKind::Send;
  p->sends = std::move(branches);
  return p;
}

ProcessPtr make_receive(std::vector<ReceiveBranch> branches, ProcessPtr timeout) {
  if (branches.empty()) throw std::invalid_argument("receive needs at least one branch");
  auto p = std::make_shared<Process>();
  p->kind = ProcKind::Receive;
  p->receives = std::move(branches);
  p->timeout = std::move(timeout);
  return p;
}

namespace {

void ser_value(std::ostream& os, const Value& v) {
  switch (v.kind) {
    case ValueKind::Atom: os << 'a' << v.name.size() << ':' << v.name; break;
    case ValueKind::Node: os << 'n' << v.name.size() << ':' << v.name; break;
    case ValueKind::Var: os << 'v' << v.name.size() << ':' << v.name; break;
  }
}

void ser_message(std::ostream& os, const Message& m) {
  os << "m(";
  for (const auto& v : m) ser_value(os, v);
  os << ')';
}

void ser_pattern(std::ostream& os, const Pattern& p) {
  os << "p(";
  for (const auto& e : p) {
    os << (e.is_var ? 'V' : 'A') << e.name.size() << ':' << e.name;
  }
  os << ')';
}

void ser_proc(std::ostream& os, const ProcessPtr& p) {
  if (!p) {
    os << "nil";
    return;
  }
  switch (p->kind) {
    case ProcKind::Inact:
      os << '0';
      break;
    case ProcKind::Sleep:
      os << "sl.";
      ser_proc(os, p->cont);
      break;
    case ProcKind::Save:
      os << "sv.";
      ser_proc(os, p->cont);
      break;
    case ProcKind::Fix:
      os << "mu" << p->var.size() << ':' << p->var << '.';
      ser_proc(os, p->cont);
      break;
    case ProcKind::RecVar:
      os << 'r' << p->var.size() << ':' << p->var;
      break;
    case ProcKind::Send:
      os << "!{";
      for (const auto& b : p->sends) {
        os << (b.target.is_var ? 'V' : 'N') << b.target.name.size() << ':' << b.target.name;
        ser_message(os, b.msg);
        os << '.';
        ser_proc(os, b.cont);
        os << ',';
      }
      os << '}';
      break;
    case ProcKind::Receive:
      os << "?{";
      for (const auto& b : p->receives) {
        ser_pattern(os, b.pat);
        os << '.';
        ser_proc(os, b.cont);
        os << ',';
      }
      os << "}aft.";
      ser_proc(os, p->timeout);
      break;
  }
}

}  // namespace

std::string serialize(const ProcessPtr& p) {
  std::ostringstream os;
  ser_proc(os, p);
  return os.str();
}

std::string serialize(const Message& m) {
  std::ostringstream os;
  ser_message(os, m);
  return os.str();
}

std::string serialize(const Pattern& p) {
  std::ostringstream os;
  ser_pattern(os, p);
  return os.str();
}

bool proc_equal(const ProcessPtr& a, const ProcessPtr& b) {
  if (a == b) return true;
  return serialize(a) == serialize(b);
}

std::string serialize(const Component& c) {
  std::ostringstream os;
  if (const auto* n = std::get_if<NodeState>(&c)) {
    os << "N" << n->id.size() << ':' << n->id << "[";
    ser_proc(os, n->proc);
    os << "|mb(";
    for (const auto& m : n->mailbox) ser_message(os, m);
    os << ")|t" << n->time << "|cp:";
    ser_proc(os, n->checkpoint);
    os << ']';
  } else if (const auto* d = std::get_if<CrashedNode>(&c)) {
    os << "D" << d->id.size() << ':' << d->id << "[t" << d->time << "|cp:";
    ser_proc(os, d->checkpoint);
    os << ']';
  } else if (const auto* f = std::get_if<FloatingMsg>(&c)) {
    os << "F(" << f->src << "->" << f->dst << ",";
    ser_message(os, f->msg);
    os << ",t" << f->time << ')';
  } else if (const auto* l = std::get_if<LatentMsg>(&c)) {
    os << "L" << l->latency << '(' << l->src << "->" << l->dst << ',';
    ser_message(os, l->msg);
    os << ",t" << l->time << ')';
  }
  return os.str();
}

std::string serialize(const System& s) {
  std::ostringstream os;
  os << "sys{";
  for (const auto& c : s.parts) os << serialize(c) << ';';
  os << '}';
  return os.str();
}

System canonicalize(System s) {
  for (auto& c : s.parts) {
    if (auto* l = std::get_if<LatentMsg>(&c)) {
      if (l->latency == 0) {
        c = FloatingMsg{l->src, l->dst, l->msg, l->time};
      }
    }
  }
  std::stable_sort(s.parts.begin(), s.parts.end(), [](const Component& a, const Component& b) {
    return serialize(a) < serialize(b);
  });
  return s;
}

namespace {

TimeOf sync(TimeOf a, TimeOf b) {
  if (a.kind == TimeOf::Undefined || b.kind == TimeOf::Undefined) return {TimeOf::Undefined};
  if (a.kind == TimeOf::Wildcard) return b;
  if (b.kind == TimeOf::Wildcard) return a;
  if (a.t == b.t) return a;
  return {TimeOf::Undefined};
}

TimeT component_time(const Component& c) {
  return std::visit([](const auto& x) { return x.time; }, c);
}

}  // namespace

TimeOf time_of(const System& s) {
  TimeOf acc{TimeOf::Wildcard};
  for (const auto& c : s.parts) {
    acc = sync(acc, TimeOf{TimeOf::Defined, component_time(c)});
    if (acc.kind == TimeOf::Undefined) break;
  }
  return acc;
}

System initial_system(const SystemConfig& cfg) {
  System s;
  for (const auto& id : cfg.nodes) {
    NodeState n;
    n.id = id;
    n.proc = cfg.initial_proc.at(id);
    n.checkpoint = cfg.initial_chkpt.at(id);
    n.time = 0;
    s.parts.push_back(std::move(n));
  }
  return canonicalize(std::move(s));
}

bool is_initial(const System& s, const SystemConfig& cfg) {
  auto t = time_of(s);
  if (!(t.kind == TimeOf::Wildcard || (t.kind == TimeOf::Defined && t.t == 0))) return false;
  return serialize(canonicalize(s)) == serialize(initial_system(cfg));
}

bool non_instantaneous(const ProcessPtr& p) {
  if (!p) return false;
  switch (p->kind) {
    case ProcKind::Sleep:
      return true;
    case ProcKind::RecVar:
    case ProcKind::Inact:
      return false;
    case ProcKind::Fix:
      return non_instantaneous(p->cont);
    case ProcKind::Save:
      // save is instantaneous; the guarantee must come from its continuation
      return non_instantaneous(p->cont);
    case ProcKind::Send: {
      for (const auto& b : p->sends)
        if (!non_instantaneous(b.cont)) return false;
      return true;
    }
    case ProcKind::Receive: {
      // the timeout handler only runs after a time step, so it is exempt
      for (const auto& b : p->receives)
        if (!non_instantaneous(b.cont)) return false;
      return true;
    }
  }
  return false;
}

ProcessPtr subst_recvar(const ProcessPtr& body, const std::string& var, const ProcessPtr& repl) {
  if (!body) return body;
  switch (body->kind) {
    case ProcKind::Inact:
      return body;
    case ProcKind::RecVar:
      return body->var == var ? repl : body;
    case ProcKind::Fix:
      if (body->var == var) return body;  // shadowed
      {
        auto inner = subst_recvar(body->cont, var, repl);
        if (inner == body->cont) return body;
        return make_fix(body->var, inner);
      }
    case ProcKind::Sleep: {
      auto inner = subst_recvar(body->cont, var, repl);
      return inner == body->cont ? body : make_sleep(inner);
    }
    case ProcKind::Save: {
      auto inner = subst_recvar(body->cont, var, repl);
      return inner == body->cont ? body : make_save(inner);
    }
    case ProcKind::Send: {
      bool changed = false;
      std::vector<SendBranch> out;
      out.reserve(body->sends.size());
      for (const auto& b : body->sends) {
        auto inner = subst_recvar(b.cont, var, repl);
        changed |= inner != b.cont;
        out.push_back({b.target, b.msg, inner});
      }
      return changed ? make_send(std::move(out)) : body;
    }
    case ProcKind::Receive: {
      bool changed = false;
      std::vector<ReceiveBranch> out;
      out.reserve(body->receives.size());
      for (const auto& b : body->receives) {
        auto inner = subst_recvar(b.cont, var, repl);
        changed |= inner != b.cont;
        out.push_back({b.pat, inner});
      }
      auto to = subst_recvar(body->timeout, var, repl);
      changed |= to != body->timeout;
      return changed ? make_receive(std::move(out), to) : body;
    }
  }
  return body;
}

ProcessPtr unfold_head(ProcessPtr p, std::size_t cap) {
  std::size_t n = 0;
  while (p && p->kind == ProcKind::Fix) {
    if (++n > cap) throw ZenoError{"recursion unfolding exceeded the Zeno guard cap"};
    p = subst_recvar(p->cont, p->var, p);
  }
  if (p && p->kind == ProcKind::RecVar)
    throw ZenoError{"unbound recursion variable '" + p->var + "'"};
  return p;
}

std::set<NodeId> node_ids_of(const System& s) {
  std::set<NodeId> ids;
  for (const auto& c : s.parts) {
    if (const auto* n = std::get_if<NodeState>(&c)) ids.insert(n->id);
    if (const auto* d = std::get_if<CrashedNode>(&c)) ids.insert(d->id);
  }
  return ids;
}

}  // namespace greyfail
