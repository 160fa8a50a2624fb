#ifndef CRISP_CONTEXT_HPP
#define CRISP_CONTEXT_HPP

#include <string>
#include <vector>

#include "crisp/eval.hpp"
#include "crisp/value.hpp"

namespace crisp {

// One telescope entry. The paper's two context zones are represented as one
// telescope with per-entry modality tags; a Crisp entry's type may mention
// only earlier Crisp entries.
struct CtxEntry {
  std::string name;
  Modality modality;
  ValuePtr type;
  bool inaccessible = false;
};

struct Ctx {
  std::vector<CtxEntry> entries;
  Env env; // one value per entry + identity levels for the decl's parameters
  std::vector<std::string> level_names;

  int depth() const { return (int)entries.size(); }

  Ctx extend(const std::string& name, Modality m, ValuePtr type) const {
    Ctx c = *this;
    c.env.vals.push_back(v_var(c.depth(), type));
    c.entries.push_back(CtxEntry{name, m, std::move(type), false});
    return c;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> ns;
    ns.reserve(entries.size());
    for (auto& e : entries) ns.push_back(e.name);
    return ns;
  }
};

// Marks every Ordinary entry inaccessible (the judgement's empty local zone).
// Idempotent; preserves telescope length and entry order.
Ctx restrict_ctx(const Ctx& ctx);

// Pretty-printed telescope with modalities, for diagnostics.
std::string context_snapshot(Eval& ev, const Ctx& ctx);

} // namespace crisp

#endif
