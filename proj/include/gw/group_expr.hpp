#ifndef GW_GROUP_EXPR_HPP
#define GW_GROUP_EXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gw/perm_group.hpp"
#include "gw/simple_factor.hpp"

namespace gw {

// Expression DSL for building permutation groups:
//   expr := term | term "x" expr
//   term := atom | "wr(" expr "," expr ")" | "onsets(" expr "," int ")"
//         | term "& alt"
//   atom := ("S"|"A"|"C"|"D") "(" int ")" | "gens[" perm ("," perm)* "]"
//         | "(" expr ")"
struct GroupExpr;
using GroupExprPtr = std::shared_ptr<const GroupExpr>;

struct GroupExpr {
  enum class Kind {
    symmetric,
    alternating,
    cyclic,
    dihedral,
    product,
    wreath,
    on_subsets,
    intersect_alternating,
    explicit_gens,
  };

  Kind kind;
  unsigned n = 0;       // S/A/C/D parameter or subset size k
  GroupExprPtr left;    // unary argument or left operand
  GroupExprPtr right;
  std::vector<Perm> gens;  // explicit_gens only

  std::string str() const;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &msg, size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

private:
  size_t offset_;
};

GroupExprPtr parse_group_expr(const std::string &text);

struct EvalOptions {
  unsigned degree_cap = 10000;
};

PermGroup evaluate(const GroupExpr &expr, const EvalOptions &opts = {});

// Composition-factor multiset by construction rules (no group algorithms):
//   S(n) -> C2 + factors(A(n));  A(n) -> [A(n)] for n>=5, A(4) -> C3+C2+C2,
//   A(3) -> C3;  C(n) -> prime factors with multiplicity;
//   product -> union;  wreath(e1,e2) -> deg(e2) copies of factors(e1) +
//   factors(e2).  Anything else (onsets, & alt, gens, D) has no rule and
//   yields nullopt.
std::optional<std::vector<SimpleFactorId>> symbolic_factors(const GroupExpr &e);

unsigned expr_degree(const GroupExpr &e, unsigned degree_cap = 10000);

} // namespace gw

#endif
