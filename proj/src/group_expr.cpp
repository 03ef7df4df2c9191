#include "gw/group_expr.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace gw {

namespace {

GroupExprPtr make_node(GroupExpr e) {
  return std::make_shared<const GroupExpr>(std::move(e));
}

class Parser {
public:
  explicit Parser(const std::string &text) : text_(text) {}

  GroupExprPtr run() {
    GroupExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("trailing input after expression");
    return e;
  }

private:
  const std::string &text_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      fail(std::string("expected '") + c + "'");
  }

  bool eat_word(const char *w) {
    skip_ws();
    size_t len = std::strlen(w);
    if (text_.compare(pos_, len, w) == 0) {
      // keywords must not run into an identifier character
      char next = pos_ + len < text_.size() ? text_[pos_ + len] : '\0';
      if (!std::isalnum(static_cast<unsigned char>(next))) {
        pos_ += len;
        return true;
      }
    }
    return false;
  }

  unsigned parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer");
    unsigned long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (v > 1000000)
        fail("integer parameter out of range");
    }
    return static_cast<unsigned>(v);
  }

  GroupExprPtr parse_expr() {
    GroupExprPtr lhs = parse_term();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      GroupExprPtr rhs = parse_expr();
      GroupExpr e;
      e.kind = GroupExpr::Kind::product;
      e.left = lhs;
      e.right = rhs;
      return make_node(std::move(e));
    }
    return lhs;
  }

  GroupExprPtr parse_term() {
    GroupExprPtr t;
    skip_ws();
    if (eat_word("wr")) {
      expect('(');
      GroupExprPtr a = parse_expr();
      expect(',');
      GroupExprPtr b = parse_expr();
      expect(')');
      GroupExpr e;
      e.kind = GroupExpr::Kind::wreath;
      e.left = a;
      e.right = b;
      t = make_node(std::move(e));
    } else if (eat_word("onsets")) {
      expect('(');
      GroupExprPtr a = parse_expr();
      expect(',');
      unsigned k = parse_uint();
      expect(')');
      GroupExpr e;
      e.kind = GroupExpr::Kind::on_subsets;
      e.left = a;
      e.n = k;
      t = make_node(std::move(e));
    } else {
      t = parse_atom();
    }
    // postfix "& alt", possibly repeated
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '&') {
        ++pos_;
        if (!eat_word("alt"))
          fail("expected 'alt' after '&'");
        GroupExpr e;
        e.kind = GroupExpr::Kind::intersect_alternating;
        e.left = t;
        t = make_node(std::move(e));
      } else {
        break;
      }
    }
    return t;
  }

  GroupExprPtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GroupExprPtr e = parse_expr();
      expect(')');
      return e;
    }
    if (eat_word("gens")) {
      expect('[');
      std::vector<std::string> texts;
      std::string cur;
      int depth = 0;
      size_t start = pos_;
      while (pos_ < text_.size()) {
        char ch = text_[pos_];
        if (ch == '(')
          ++depth;
        if (ch == ')')
          --depth;
        if (ch == ']' && depth == 0)
          break;
        if (ch == ',' && depth == 0) {
          texts.push_back(cur);
          cur.clear();
          ++pos_;
          continue;
        }
        cur += ch;
        ++pos_;
      }
      if (pos_ >= text_.size())
        fail("unterminated gens[...]");
      ++pos_; // ']'
      bool has_content = std::any_of(cur.begin(), cur.end(), [](char ch) {
        return !std::isspace(static_cast<unsigned char>(ch));
      });
      if (has_content)
        texts.push_back(cur);
      if (texts.empty())
        throw ParseError("gens[...] needs at least one permutation", start);
      // parse each at the largest mentioned degree
      unsigned degree = 1;
      std::vector<Perm> parsed;
      for (const std::string &s : texts) {
        Perm p = Perm::parse_cycles(s);
        degree = std::max(degree, p.degree());
      }
      for (const std::string &s : texts)
        parsed.push_back(Perm::parse_cycles(s, degree));
      GroupExpr e;
      e.kind = GroupExpr::Kind::explicit_gens;
      e.n = degree;
      e.gens = std::move(parsed);
      return make_node(std::move(e));
    }
    if (c == 'S' || c == 'A' || c == 'C' || c == 'D') {
      ++pos_;
      expect('(');
      unsigned n = parse_uint();
      expect(')');
      GroupExpr e;
      switch (c) {
      case 'S': e.kind = GroupExpr::Kind::symmetric; break;
      case 'A': e.kind = GroupExpr::Kind::alternating; break;
      case 'C': e.kind = GroupExpr::Kind::cyclic; break;
      default:  e.kind = GroupExpr::Kind::dihedral; break;
      }
      if (n == 0)
        fail("group parameter must be >= 1");
      if (e.kind == GroupExpr::Kind::dihedral && n < 3)
        fail("D(n) requires n >= 3 for a faithful action on n points");
      e.n = n;
      return make_node(std::move(e));
    }
    fail("expected group atom");
  }
};

unsigned long long binomial_capped(unsigned n, unsigned k,
                                   unsigned long long cap) {
  unsigned long long b = 1;
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  for (unsigned i = 1; i <= k; ++i) {
    b = b * (n - k + i) / i;
    if (b > cap)
      return cap + 1;
  }
  return b;
}

std::vector<Perm> symmetric_gens(unsigned n) {
  if (n == 1)
    return {Perm(1)};
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n >= 3) {
    std::vector<uint32_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0u);
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return gens;
}

std::vector<Perm> alternating_gens(unsigned n) {
  if (n <= 2)
    return {Perm(std::max(n, 1u))};
  if (n == 3)
    return {Perm::from_cycles(3, {{0, 1, 2}})};
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1, 2}})};
  if (n % 2 == 1) {
    std::vector<uint32_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0u);
    gens.push_back(Perm::from_cycles(n, {cyc}));
  } else {
    std::vector<uint32_t> cyc(n - 1);
    std::iota(cyc.begin(), cyc.end(), 1u);
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return gens;
}

PermGroup eval_node(const GroupExpr &e, const EvalOptions &opts);

PermGroup eval_product(const GroupExpr &e, const EvalOptions &opts) {
  PermGroup a = eval_node(*e.left, opts);
  PermGroup b = eval_node(*e.right, opts);
  unsigned d = a.degree() + b.degree();
  if (d > opts.degree_cap)
    throw std::runtime_error("degree cap exceeded in product");
  std::vector<Perm> gens;
  for (const Perm &g : a.generators())
    gens.push_back(g.extended(d));
  for (const Perm &g : b.generators())
    gens.push_back(g.shifted(a.degree(), d));
  return PermGroup(d, std::move(gens));
}

PermGroup eval_wreath(const GroupExpr &e, const EvalOptions &opts) {
  // Imprimitive action: wr(G,H) with deg(G)=a, deg(H)=b acts on a*b points
  // arranged in b blocks of size a; the base group is one copy of G per
  // block and the top group H permutes the blocks.
  PermGroup g = eval_node(*e.left, opts);
  PermGroup h = eval_node(*e.right, opts);
  unsigned a = g.degree(), b = h.degree();
  unsigned long long d = static_cast<unsigned long long>(a) * b;
  if (d > opts.degree_cap)
    throw std::runtime_error("degree cap exceeded in wreath product");
  unsigned deg = static_cast<unsigned>(d);
  std::vector<Perm> gens;
  for (unsigned j = 0; j < b; ++j)
    for (const Perm &s : g.generators()) {
      std::vector<uint32_t> im(deg);
      std::iota(im.begin(), im.end(), 0u);
      for (unsigned i = 0; i < a; ++i)
        im[j * a + i] = j * a + s[i];
      gens.push_back(Perm(std::move(im)));
    }
  for (const Perm &t : h.generators()) {
    std::vector<uint32_t> im(deg);
    for (unsigned j = 0; j < b; ++j)
      for (unsigned i = 0; i < a; ++i)
        im[j * a + i] = t[j] * a + i;
    gens.push_back(Perm(std::move(im)));
  }
  return PermGroup(deg, std::move(gens));
}

PermGroup eval_on_subsets(const GroupExpr &e, const EvalOptions &opts) {
  PermGroup g = eval_node(*e.left, opts);
  unsigned n = g.degree(), k = e.n;
  if (k < 1 || k >= n)
    throw std::runtime_error("on_subsets requires 1 <= k < degree");
  unsigned long long d = binomial_capped(n, k, opts.degree_cap);
  if (d > opts.degree_cap)
    throw std::runtime_error("degree cap exceeded in on_subsets");
  // enumerate k-subsets in lexicographic order
  std::vector<std::vector<uint32_t>> subsets;
  std::vector<uint32_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0u);
  std::map<std::vector<uint32_t>, uint32_t> index;
  for (;;) {
    index[cur] = static_cast<uint32_t>(subsets.size());
    subsets.push_back(cur);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[i] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++cur[i];
    for (unsigned j = i + 1; j < k; ++j)
      cur[j] = cur[j - 1] + 1;
  }
  std::vector<Perm> gens;
  for (const Perm &s : g.generators()) {
    std::vector<uint32_t> im(subsets.size());
    for (uint32_t idx = 0; idx < subsets.size(); ++idx) {
      std::vector<uint32_t> moved;
      for (uint32_t p : subsets[idx])
        moved.push_back(s[p]);
      std::sort(moved.begin(), moved.end());
      im[idx] = index.at(moved);
    }
    gens.push_back(Perm(std::move(im)));
  }
  return PermGroup(static_cast<unsigned>(subsets.size()), std::move(gens));
}

PermGroup eval_intersect_alternating(const GroupExpr &e,
                                     const EvalOptions &opts) {
  // Kernel of the sign map. With transversal {id, t} for an odd generator
  // t, Schreier's lemma gives generators: even g stay, along with t*g*t^-1,
  // and odd g contribute g*t^-1 and t*g.
  PermGroup g = eval_node(*e.left, opts);
  const Perm *odd = nullptr;
  for (const Perm &s : g.generators())
    if (!s.is_even()) {
      odd = &s;
      break;
    }
  if (!odd)
    return g;
  Perm t = *odd;
  Perm tinv = t.inverse();
  std::vector<Perm> gens;
  for (const Perm &s : g.generators()) {
    if (s.is_even()) {
      gens.push_back(s);
      gens.push_back(t * s * tinv);
    } else {
      gens.push_back(s * tinv);
      gens.push_back(t * s);
    }
  }
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup eval_node(const GroupExpr &e, const EvalOptions &opts) {
  switch (e.kind) {
  case GroupExpr::Kind::symmetric:
    if (e.n > opts.degree_cap)
      throw std::runtime_error("degree cap exceeded");
    return PermGroup(e.n, symmetric_gens(e.n));
  case GroupExpr::Kind::alternating:
    if (e.n > opts.degree_cap)
      throw std::runtime_error("degree cap exceeded");
    return PermGroup(std::max(e.n, 1u), alternating_gens(e.n));
  case GroupExpr::Kind::cyclic: {
    if (e.n > opts.degree_cap)
      throw std::runtime_error("degree cap exceeded");
    if (e.n == 1)
      return PermGroup::trivial(1);
    std::vector<uint32_t> cyc(e.n);
    std::iota(cyc.begin(), cyc.end(), 0u);
    return PermGroup(e.n, {Perm::from_cycles(e.n, {cyc})});
  }
  case GroupExpr::Kind::dihedral: {
    if (e.n > opts.degree_cap)
      throw std::runtime_error("degree cap exceeded");
    std::vector<uint32_t> rot(e.n), refl(e.n);
    for (unsigned i = 0; i < e.n; ++i) {
      rot[i] = (i + 1) % e.n;
      refl[i] = (e.n - i) % e.n;
    }
    return PermGroup(e.n, {Perm(std::move(rot)), Perm(std::move(refl))});
  }
  case GroupExpr::Kind::product:
    return eval_product(e, opts);
  case GroupExpr::Kind::wreath:
    return eval_wreath(e, opts);
  case GroupExpr::Kind::on_subsets:
    return eval_on_subsets(e, opts);
  case GroupExpr::Kind::intersect_alternating:
    return eval_intersect_alternating(e, opts);
  case GroupExpr::Kind::explicit_gens:
    return PermGroup(e.n, e.gens);
  }
  throw std::logic_error("unhandled expression kind");
}

void prime_factors_into(unsigned n, std::vector<SimpleFactorId> &out) {
  for (unsigned p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.push_back(SimpleFactorId::cyclic(p));
      n /= p;
    }
  if (n > 1)
    out.push_back(SimpleFactorId::cyclic(n));
}

} // namespace

std::string GroupExpr::str() const {
  std::ostringstream os;
  switch (kind) {
  case Kind::symmetric:   os << "S(" << n << ")"; break;
  case Kind::alternating: os << "A(" << n << ")"; break;
  case Kind::cyclic:      os << "C(" << n << ")"; break;
  case Kind::dihedral:    os << "D(" << n << ")"; break;
  case Kind::product:
    os << left->str() << " x " << right->str();
    break;
  case Kind::wreath:
    os << "wr(" << left->str() << ", " << right->str() << ")";
    break;
  case Kind::on_subsets:
    os << "onsets(" << left->str() << ", " << n << ")";
    break;
  case Kind::intersect_alternating: {
    bool paren = left->kind == Kind::product;
    os << (paren ? "(" : "") << left->str() << (paren ? ")" : "") << " & alt";
    break;
  }
  case Kind::explicit_gens: {
    os << "gens[";
    for (size_t i = 0; i < gens.size(); ++i)
      os << (i ? "," : "") << gens[i].str();
    os << "]";
    break;
  }
  }
  return os.str();
}

GroupExprPtr parse_group_expr(const std::string &text) {
  return Parser(text).run();
}

PermGroup evaluate(const GroupExpr &expr, const EvalOptions &opts) {
  return eval_node(expr, opts);
}

unsigned expr_degree(const GroupExpr &e, unsigned degree_cap) {
  EvalOptions opts;
  opts.degree_cap = degree_cap;
  return evaluate(e, opts).degree();
}

std::optional<std::vector<SimpleFactorId>>
symbolic_factors(const GroupExpr &e) {
  using K = GroupExpr::Kind;
  std::vector<SimpleFactorId> out;
  switch (e.kind) {
  case K::symmetric: {
    if (e.n >= 2)
      out.push_back(SimpleFactorId::cyclic(2));
    GroupExpr alt;
    alt.kind = K::alternating;
    alt.n = e.n;
    auto sub = symbolic_factors(alt);
    out.insert(out.end(), sub->begin(), sub->end());
    return out;
  }
  case K::alternating:
    if (e.n >= 5) {
      out.push_back(SimpleFactorId::alternating(e.n));
    } else if (e.n == 4) {
      out.push_back(SimpleFactorId::cyclic(3));
      out.push_back(SimpleFactorId::cyclic(2));
      out.push_back(SimpleFactorId::cyclic(2));
    } else if (e.n == 3) {
      out.push_back(SimpleFactorId::cyclic(3));
    }
    return out;
  case K::cyclic:
    prime_factors_into(e.n, out);
    return out;
  case K::product: {
    auto a = symbolic_factors(*e.left);
    auto b = symbolic_factors(*e.right);
    if (!a || !b)
      return std::nullopt;
    out = *a;
    out.insert(out.end(), b->begin(), b->end());
    return out;
  }
  case K::wreath: {
    auto a = symbolic_factors(*e.left);
    auto b = symbolic_factors(*e.right);
    if (!a || !b)
      return std::nullopt;
    unsigned copies = expr_degree(*e.right);
    for (unsigned i = 0; i < copies; ++i)
      out.insert(out.end(), a->begin(), a->end());
    out.insert(out.end(), b->begin(), b->end());
    return out;
  }
  default:
    return std::nullopt;
  }
}

} // namespace gw
