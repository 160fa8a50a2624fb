#ifndef CRISP_PRETTY_HPP
#define CRISP_PRETTY_HPP

#include <string>
#include <vector>

#include "crisp/ast.hpp"
#include "crisp/term.hpp"

namespace crisp {

// Output re-parses to a tree equal to the input up to spans.
std::string pretty(const RawTerm& t);

// Core terms print with binder name hints; `names` is the telescope of
// context entry names, innermost last.
std::string pretty_core(const CoreTerm& t, std::vector<std::string> names,
                        const std::vector<std::string>& level_names = {});

} // namespace crisp

#endif
