#ifndef CRISP_ELABORATE_HPP
#define CRISP_ELABORATE_HPP

#include <set>
#include <utility>

#include "crisp/ast.hpp"
#include "crisp/context.hpp"
#include "crisp/signature.hpp"

namespace crisp {

// Raised when a declaration references a name whose own check failed earlier;
// the declaration is reported as skipped, not as a fresh error.
struct SkippedDependency {
  std::string name;
};

// Bidirectional elaboration from raw syntax to core terms, enforcing the
// crisp modal discipline: restricted positions are the domain of a crisp Pi,
// the argument of a crisp application, and A/x/y/p of crisp identity
// induction (whose motive binds its variables crisp).
class Elaborator {
public:
  Elaborator(Eval& ev, const std::set<std::string>* poisoned = nullptr)
      : ev_(ev), poisoned_(poisoned) {}

  std::pair<TermPtr, ValuePtr> infer(const Ctx& ctx, const RawTerm& t);
  TermPtr check(const Ctx& ctx, const RawTerm& t, const ValuePtr& type);
  // check in the restricted context; success means the term mentions no
  // ordinary variable of ctx.
  TermPtr check_crisp_argument(const Ctx& ctx, const RawTerm& t, const ValuePtr& type);

  // infer + require the result to be a universe
  std::pair<TermPtr, LevelExpr> infer_type(const Ctx& ctx, const RawTerm& t);

  LevelExpr elab_level(const Ctx& ctx, const RawTerm& t);

private:
  Eval& ev_;
  const std::set<std::string>* poisoned_;

  std::pair<TermPtr, ValuePtr> infer_spine(const Ctx& ctx, const RawTerm& t);
  std::pair<TermPtr, ValuePtr> infer_j(const Ctx& ctx, const RawTerm& t, bool crisp);
  [[noreturn]] void conv_fail(const Ctx& ctx, const RawTerm& at,
                              const ValuePtr& expected, const ValuePtr& got);
};

// Checks one declaration and extends the signature. Throws CheckError or
// SkippedDependency. Postulates add their type; defs check the body against
// the stated type. Import declarations are the loader's business.
void check_declaration(Signature& sig, Eval& ev, const RawDecl& decl,
                       const std::string& origin_file,
                       const std::set<std::string>* poisoned = nullptr);

} // namespace crisp

#endif
