#ifndef CRISP_CORE_CHECK_HPP
#define CRISP_CORE_CHECK_HPP

#include "crisp/context.hpp"
#include "crisp/signature.hpp"

namespace crisp {

// Second, elaboration-free pass over core terms. Re-derives every typing and
// modality side condition directly on the de Bruijn syntax; shares only the
// evaluator with the elaborator. Throws CheckError on any violation.
ValuePtr core_infer(Eval& ev, const Ctx& ctx, const TermPtr& t);
void core_check(Eval& ev, const Ctx& ctx, const TermPtr& t, const ValuePtr& type);

// Re-checks a whole signature entry (type, and the body against the type).
void core_check_entry(Eval& ev, const SigEntry& entry);

} // namespace crisp

#endif
