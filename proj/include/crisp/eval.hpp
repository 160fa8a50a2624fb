#ifndef CRISP_EVAL_HPP
#define CRISP_EVAL_HPP

#include <map>

#include "crisp/signature.hpp"
#include "crisp/value.hpp"

namespace crisp {

// Normalization by evaluation against a fixed signature. Definitions unfold
// eagerly; postulates, variables and stuck eliminations form neutrals.
class Eval {
public:
  explicit Eval(const Signature& sig) : sig_(sig) {}

  const Signature& sig() const { return sig_; }

  ValuePtr eval(const Env& env, const TermPtr& t);
  ValuePtr apply_closure(const Closure& c, const ValuePtr& v);

  ValuePtr v_app(const ValuePtr& f, const ValuePtr& a);
  ValuePtr v_fst(const ValuePtr& p);
  ValuePtr v_snd(const ValuePtr& p);
  ValuePtr v_j(bool crisp, const ValuePtr& A, const ValuePtr& x, const ValuePtr& C,
               const ValuePtr& z, const ValuePtr& y, const ValuePtr& p);
  ValuePtr v_absurd(const ValuePtr& A, const ValuePtr& e);

  // Type of the motive of J/Jc on x : A, as a value:
  // (y [::] A) -> (p [::] Eq A x y) -> Set _.
  ValuePtr motive_type(bool crisp, const ValuePtr& A, const ValuePtr& x);

  // Definitional equality of a and b as inhabitants of `type`, with
  // eta for Pi (both modalities), Sigma and Unit. `depth` is the number
  // of bound variables in scope (de Bruijn level supply).
  bool convertible(int depth, const ValuePtr& type, const ValuePtr& a,
                   const ValuePtr& b);
  // Equality of two types (inhabitants of some universe).
  bool conv_type(int depth, const ValuePtr& A, const ValuePtr& B);

  // Type-directed readback; beta-normal, eta-long for Pi, eta-expanded for
  // Sigma, collapses Unit inhabitants to tt.
  TermPtr quote(int depth, const ValuePtr& type, const ValuePtr& v);
  TermPtr quote_type(int depth, const ValuePtr& A);

private:
  const Signature& sig_;
  std::map<std::string, ValuePtr> unfold_memo_;

  ValuePtr eval_const(const std::string& name, std::vector<LevelExpr> levels);
  bool conv_neutral(int depth, const VNeutral& x, const VNeutral& y);
  TermPtr quote_neutral(int depth, const VNeutral& n);
};

} // namespace crisp

#endif
