#include "gw/simple_factor.hpp"

#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "gw/perm_group.hpp"
#include "gw/width.hpp"

namespace gw {

namespace {

struct TableEntry {
  unsigned long order;
  const char *name;
  bool sporadic;
};

// Nonabelian simple group orders below 10^6, excluding alternating orders
// (recognized analytically). The only order collision in this range is
// 20160 = |A8| = |PSL(3,4)|.
const TableEntry kSimpleOrders[] = {
    {168, "PSL(2,7)", false},    {504, "PSL(2,8)", false},
    {660, "PSL(2,11)", false},   {1092, "PSL(2,13)", false},
    {2448, "PSL(2,17)", false},  {3420, "PSL(2,19)", false},
    {4080, "PSL(2,16)", false},  {5616, "PSL(3,3)", false},
    {6048, "PSU(3,3)", false},   {6072, "PSL(2,23)", false},
    {7800, "PSL(2,25)", false},  {7920, "M11", true},
    {9828, "PSL(2,27)", false},  {12180, "PSL(2,29)", false},
    {14880, "PSL(2,31)", false}, {20160, "PSL(3,4)", false},
    {25308, "PSL(2,37)", false}, {25920, "PSU(4,2)", false},
    {29120, "Sz(8)", false},     {32736, "PSL(2,32)", false},
    {34440, "PSL(2,41)", false}, {39732, "PSL(2,43)", false},
    {51888, "PSL(2,47)", false}, {58800, "PSL(2,49)", false},
    {62400, "PSU(3,4)", false},  {74412, "PSL(2,53)", false},
    {95040, "M12", true},        {102660, "PSL(2,59)", false},
    {113460, "PSL(2,61)", false},{126000, "PSU(3,5)", false},
    {150348, "PSL(2,67)", false},{175560, "J1", true},
    {178920, "PSL(2,71)", false},{194472, "PSL(2,73)", false},
    {246480, "PSL(2,79)", false},{262080, "PSL(2,64)", false},
    {265680, "PSL(2,81)", false},{285852, "PSL(2,83)", false},
    {352440, "PSL(2,89)", false},{372000, "PSL(3,5)", false},
    {443520, "M22", true},       {456288, "PSL(2,97)", false},
    {515100, "PSL(2,101)", false},{546312, "PSL(2,103)", false},
    {604800, "J2", true},        {612468, "PSL(2,107)", false},
    {647460, "PSL(2,109)", false},{721392, "PSL(2,113)", false},
    {885720, "PSL(2,121)", false},{976500, "PSL(2,125)", false},
    {979200, "PSp(4,4)", false},
};

// n with n!/2 == order, for n >= 5.
std::optional<unsigned> alternating_parameter(const mpz_class &order) {
  mpz_class half_fact = 60; // 5!/2
  for (unsigned n = 5; n < 1000; ++n) {
    if (half_fact == order)
      return n;
    if (half_fact > order)
      return std::nullopt;
    half_fact *= n + 1;
  }
  return std::nullopt;
}

bool has_element_of_order(const PermGroup &g, unsigned long target,
                          unsigned samples) {
  std::mt19937_64 rng(0x73696d706c65ull ^ g.degree());
  for (const Perm &s : g.generators())
    if (s.element_order() == target)
      return true;
  for (unsigned i = 0; i < samples; ++i)
    if (g.random_element(rng).element_order() == target)
      return true;
  return false;
}

// Certified mu values, keyed by display label; computed on first use by the
// exhaustive search over the realization that was passed in.
std::optional<unsigned> certified_mu(const std::string &key,
                                     const PermGroup &g, unsigned long bound) {
  static std::mutex mu_mutex;
  static std::map<std::string, std::optional<unsigned>> cache;
  std::lock_guard<std::mutex> lock(mu_mutex);
  auto it = cache.find(key);
  if (it != cache.end())
    return it->second;
  std::optional<unsigned> mu = mu_exhaustive(g, bound);
  cache.emplace(key, mu);
  return mu;
}

} // namespace

SimpleFactorId SimpleFactorId::cyclic(unsigned p) {
  SimpleFactorId id;
  id.label = Label::cyclic;
  id.parameter = p;
  id.order = p;
  id.mu = p;
  id.mu_provenance = MuProvenance::analytic;
  return id;
}

SimpleFactorId SimpleFactorId::alternating(unsigned n) {
  SimpleFactorId id;
  id.label = Label::alternating;
  id.parameter = n;
  mpz_class fact = 1;
  for (unsigned i = 2; i <= n; ++i)
    fact *= i;
  id.order = fact / 2;
  id.mu = n;
  id.mu_provenance = MuProvenance::analytic;
  return id;
}

std::string SimpleFactorId::display() const {
  switch (label) {
  case Label::cyclic:
    return "C(" + std::to_string(parameter) + ")";
  case Label::alternating:
    return "A(" + std::to_string(parameter) + ")";
  case Label::classical:
  case Label::sporadic:
    return name;
  case Label::unidentified:
    return "unidentified(" + order.get_str() + ")";
  }
  return "?";
}

SimpleFactorId identify_simple(const PermGroup &g, unsigned long table_bound,
                               unsigned long mu_bound) {
  mpz_class order = g.order();
  if (order <= 1)
    throw std::invalid_argument("identify_simple: trivial group");

  if (mpz_probab_prime_p(order.get_mpz_t(), 30) > 0) {
    if (!order.fits_uint_p())
      throw std::runtime_error("prime factor order out of range");
    return SimpleFactorId::cyclic(static_cast<unsigned>(order.get_ui()));
  }

  if (auto n = alternating_parameter(order)) {
    bool is_alternating = true;
    if (order == 20160) {
      // |A8| = |PSL(3,4)|; A8 has elements of order 15, PSL(3,4) does not.
      is_alternating = has_element_of_order(g, 15, 500);
    }
    if (is_alternating) {
      SimpleFactorId id = SimpleFactorId::alternating(*n);
      if (order <= mu_bound) {
        auto mu = certified_mu(id.display(), g, mu_bound);
        if (mu && *mu != *id.mu)
          throw std::logic_error("exhaustive mu disagrees with A(n) analytic value");
        if (mu)
          id.mu_provenance = SimpleFactorId::MuProvenance::exhaustive_search;
      }
      id.degree_bound = g.degree();
      return id;
    }
  }

  if (order <= table_bound) {
    for (const TableEntry &e : kSimpleOrders) {
      if (order == e.order) {
        SimpleFactorId id;
        id.label = e.sporadic ? SimpleFactorId::Label::sporadic
                              : SimpleFactorId::Label::classical;
        id.name = e.name;
        id.order = order;
        id.degree_bound = g.degree();
        if (order <= mu_bound) {
          id.mu = certified_mu(id.name, g, mu_bound);
          if (id.mu)
            id.mu_provenance = SimpleFactorId::MuProvenance::exhaustive_search;
        }
        return id;
      }
    }
    throw std::runtime_error(
        "identify_simple: order " + order.get_str() +
        " matches no simple group; the caller passed a non-simple group");
  }

  SimpleFactorId id;
  id.label = SimpleFactorId::Label::unidentified;
  id.order = order;
  id.degree_bound = g.degree();
  return id;
}

} // namespace gw
