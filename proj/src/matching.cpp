#include "greyfail/matching.hpp"

namespace greyfail {

std::optional<Substitution> match_pattern(const Pattern& p, const Message& m) {
  if (p.size() != m.size()) return std::nullopt;  // Tuple rule: equal size
  Substitution s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& pe = p[i];
    const auto& v = m[i];
    if (pe.is_var) {
      // VarA / VarN, resolved by the runtime kind of the value
      s.bindings[pe.name] = v;
    } else {
      if (v.kind != ValueKind::Atom || v.name != pe.name) return std::nullopt;
    }
  }
  return s;
}

std::vector<ReceiveMatch> select_receive(const std::vector<ReceiveBranch>& branches,
                                         const std::vector<Message>& mailbox,
                                         bool erlang_order) {
  for (std::size_t mi = 0; mi < mailbox.size(); ++mi) {
    std::vector<ReceiveMatch> out;
    for (std::size_t bi = 0; bi < branches.size(); ++bi) {
      if (auto s = match_pattern(branches[bi].pat, mailbox[mi])) {
        out.push_back({mi, bi, std::move(*s)});
        if (erlang_order) break;
      }
    }
    if (!out.empty()) return out;
  }
  return {};
}

Message apply_subst(const Message& m, const Substitution& s) {
  Message out = m;
  for (auto& v : out) {
    if (v.kind == ValueKind::Var) {
      auto it = s.bindings.find(v.name);
      if (it != s.bindings.end()) v = it->second;
    }
  }
  return out;
}

namespace {

Substitution without(const Substitution& s, const Pattern& pat) {
  Substitution out = s;
  for (const auto& pe : pat)
    if (pe.is_var) out.bindings.erase(pe.name);
  return out;
}

}  // namespace

ProcessPtr apply_subst(const ProcessPtr& p, const Substitution& s) {
  if (!p || s.bindings.empty()) return p;
  switch (p->kind) {
    case ProcKind::Inact:
    case ProcKind::RecVar:
      return p;
    case ProcKind::Sleep: {
      auto inner = apply_subst(p->cont, s);
      return inner == p->cont ? p : make_sleep(inner);
    }
    case ProcKind::Save: {
      auto inner = apply_subst(p->cont, s);
      return inner == p->cont ? p : make_save(inner);
    }
    case ProcKind::Fix: {
      auto inner = apply_subst(p->cont, s);
      return inner == p->cont ? p : make_fix(p->var, inner);
    }
    case ProcKind::Send: {
      bool changed = false;
      std::vector<SendBranch> out;
      out.reserve(p->sends.size());
      for (const auto& b : p->sends) {
        SendBranch nb = b;
        if (b.target.is_var) {
          auto it = s.bindings.find(b.target.name);
          if (it != s.bindings.end()) {
            if (it->second.kind != ValueKind::Node)
              throw SubstError{"value '" + it->second.name +
                               "' substituted into send-target position is not a node id"};
            nb.target = {false, it->second.name};
            changed = true;
          }
        }
        auto msg = apply_subst(b.msg, s);
        if (msg != b.msg) changed = true;
        nb.msg = std::move(msg);
        nb.cont = apply_subst(b.cont, s);
        changed |= nb.cont != b.cont;
        out.push_back(std::move(nb));
      }
      return changed ? make_send(std::move(out)) : p;
    }
    case ProcKind::Receive: {
      bool changed = false;
      std::vector<ReceiveBranch> out;
      out.reserve(p->receives.size());
      for (const auto& b : p->receives) {
        // pattern variables rebind inside the branch continuation
        Substitution reduced = without(s, b.pat);
        auto inner = reduced.bindings.empty() ? b.cont : apply_subst(b.cont, reduced);
        changed |= inner != b.cont;
        out.push_back({b.pat, inner});
      }
      auto to = apply_subst(p->timeout, s);
      changed |= to != p->timeout;
      return changed ? make_receive(std::move(out), to) : p;
    }
  }
  return p;
}

}  // namespace greyfail
