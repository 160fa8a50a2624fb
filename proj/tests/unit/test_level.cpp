#include <doctest.h>

#include <map>

#include "../common/level_oracle.hpp"

using namespace crisp;
namespace lo = level_oracle;

TEST_CASE("level_normalize on constant folds") {
  // lmax 1 (lmax 0 0) -> constant 1
  auto one = lo::suc(lo::zero());
  auto e = lo::max(one, lo::max(lo::zero(), lo::zero()));
  LevelExpr n = lo::normalize(e);
  CHECK(n.is_constant());
  CHECK(n.constant == 1);
}

TEST_CASE("level_normalize lmax l (lsuc l)") {
  // Brute-force over l in 0..4: equals the single atom (l, 1).
  auto l = lo::var(0);
  auto e = lo::max(l, lo::suc(l));
  LevelExpr n = lo::normalize(e);
  for (unsigned v = 0; v <= 4; v++) {
    CHECK(n.eval({v}) == lo::eval(e, {v}));
  }
  LevelExpr expect;
  expect.constant = 0;
  expect.atoms = {{0u, 1u}};
  CHECK(n == expect);
  CHECK(n.to_string({"l"}) == "lsuc (l)");
}

TEST_CASE("level_normalize keeps an undominated constant") {
  // lmax 1 (lmax m n) -> constant 1 with atoms (m,0) (n,0)
  auto one = lo::suc(lo::zero());
  auto e = lo::max(one, lo::max(lo::var(0), lo::var(1)));
  LevelExpr n = lo::normalize(e);
  LevelExpr expect;
  expect.constant = 1;
  expect.atoms = {{0u, 0u}, {1u, 0u}};
  CHECK(n == expect);
}

TEST_CASE("level_eq basics") {
  LevelExpr a = LevelExpr::make_var(0);
  CHECK(level_eq(a, a));
  CHECK_FALSE(level_eq(LevelExpr::make_const(1), LevelExpr::make_const(2)));
  // lmax m n vs lmax n m, brute force over 0..4
  auto x = lo::max(lo::var(0), lo::var(1));
  auto y = lo::max(lo::var(1), lo::var(0));
  LevelExpr nx = lo::normalize(x), ny = lo::normalize(y);
  CHECK(level_eq(nx, ny));
  for (auto& asn : lo::assignments(2, 4)) CHECK(lo::eval(x, asn) == lo::eval(y, asn));
}

TEST_CASE("normalization agrees with the evaluator, exhaustive depth 3") {
  auto exprs = lo::enumerate(3, 2);
  auto asns = lo::assignments(2, 4);
  // vec-of-values -> canonical form; canonical forms must classify exactly
  // like semantic equality on the grid.
  std::map<std::vector<unsigned>, LevelExpr> classes;
  std::map<LevelExpr, std::vector<unsigned>> reverse;
  for (auto& e : exprs) {
    LevelExpr n = lo::normalize(e);
    std::vector<unsigned> vec;
    vec.reserve(asns.size());
    for (auto& a : asns) {
      unsigned direct = lo::eval(e, a);
      REQUIRE(n.eval(a) == direct);
      vec.push_back(direct);
    }
    auto [it, fresh] = classes.emplace(vec, n);
    if (!fresh) REQUIRE(level_eq(it->second, n));
    auto [rit, rfresh] = reverse.emplace(n, vec);
    if (!rfresh) REQUIRE(rit->second == vec);
  }
}

TEST_CASE("idempotence and instantiation") {
  auto exprs = lo::enumerate(3, 2);
  for (auto& e : exprs) {
    LevelExpr n = lo::normalize(e);
    // normalize is idempotent: re-normalizing the canonical form via its
    // max/suc decomposition changes nothing.
    LevelExpr again = LevelExpr::make_const(n.constant);
    for (auto& [v, k] : n.atoms)
      again = level_max(again, level_shift(LevelExpr::make_var(v), k));
    CHECK(level_eq(n, again));
  }
  // substitution respects evaluation
  LevelExpr m = level_max(LevelExpr::make_var(0), level_suc(LevelExpr::make_var(1)));
  std::vector<LevelExpr> args = {level_suc(LevelExpr::make_var(0)),
                                 LevelExpr::make_const(2)};
  LevelExpr inst = level_instantiate(m, args);
  for (unsigned v = 0; v <= 4; v++) {
    unsigned expect = std::max(v + 1, 3u);
    CHECK(inst.eval({v}) == expect);
  }
}
