#ifndef CRISP_LEVEL_HPP
#define CRISP_LEVEL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace crisp {

// Universe level in canonical form: max of a constant and finitely many
// (variable + offset) atoms, at most one atom per variable. Variables are
// indices into the enclosing declaration's prenex level parameters.
//
// Canonical invariants:
//   - atoms sorted by variable, no variable twice;
//   - the constant is kept only when it is not dominated, i.e. atoms empty
//     or constant > max atom offset (an atom (v,k) is always >= k).
struct LevelExpr {
  unsigned constant = 0;
  std::vector<std::pair<uint32_t, unsigned>> atoms; // (variable, offset)

  static LevelExpr make_const(unsigned c);
  static LevelExpr make_var(uint32_t v);

  bool is_constant() const { return atoms.empty(); }
  bool operator==(const LevelExpr& o) const {
    return constant == o.constant && atoms == o.atoms;
  }
  bool operator!=(const LevelExpr& o) const { return !(*this == o); }
  bool operator<(const LevelExpr& o) const {
    if (constant != o.constant) return constant < o.constant;
    return atoms < o.atoms;
  }

  // Largest variable index mentioned plus one; 0 when constant.
  uint32_t var_bound() const;

  unsigned eval(const std::vector<unsigned>& assignment) const;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;
};

LevelExpr level_suc(const LevelExpr& e);
LevelExpr level_shift(const LevelExpr& e, unsigned offset);
LevelExpr level_max(const LevelExpr& a, const LevelExpr& b);

// Instantiates every variable v by args[v]; args must cover var_bound().
LevelExpr level_instantiate(const LevelExpr& e, const std::vector<LevelExpr>& args);

// Canonical forms decide semantic equality, so this is structural equality.
inline bool level_eq(const LevelExpr& a, const LevelExpr& b) { return a == b; }

} // namespace crisp

#endif
