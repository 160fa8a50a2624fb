#ifndef CRISP_SIGNATURE_HPP
#define CRISP_SIGNATURE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crisp/term.hpp"

namespace crisp {

struct SigEntry {
  std::string name;
  std::vector<std::string> level_params;
  TermPtr type;              // closed, checked in the empty context
  TermPtr body;              // null for postulates
  std::string origin_file;
};

// Append-only map of top-level constants. Every entry's type and body check
// in the empty context, so constants satisfy the crisp variable rule
// unconditionally.
class Signature {
public:
  const SigEntry* find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &entries_[it->second];
  }
  bool add(SigEntry e) {
    if (index_.count(e.name)) return false;
    index_[e.name] = entries_.size();
    entries_.push_back(std::move(e));
    return true;
  }
  const std::vector<SigEntry>& entries() const { return entries_; }

private:
  std::vector<SigEntry> entries_;
  std::map<std::string, size_t> index_;
};

} // namespace crisp

#endif
