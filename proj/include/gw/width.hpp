#ifndef GW_WIDTH_HPP
#define GW_WIDTH_HPP

#include <optional>
#include <vector>

#include "gw/perm_group.hpp"
#include "gw/simple_factor.hpp"
#include "gw/structure.hpp"

namespace gw {

struct SubgroupChain {
  std::vector<PermGroup> links;    // G = links[0] > ... > links.back() = 1
  std::vector<mpz_class> indices;  // indices[i] = [links[i] : links[i+1]]

  bool strict() const;
  void validate() const; // subgroup + index consistency, throws on failure
};

// Maximum index along the chain; a single-link (trivial) chain costs 1.
mpz_class chain_cost(const SubgroupChain &c);

// Point-stabilizer chain of a transitive group, with stabilizers taken in
// point order and duplicate links collapsed. The first index equals the
// degree and all later indices are strictly smaller.
SubgroupChain stabilizer_chain(const PermGroup &g);

enum class Confidence { proved, heuristic_lower_bound, upper_bound_only };

const char *confidence_name(Confidence c);

struct WidthReport {
  unsigned width = 1;
  Confidence confidence = Confidence::proved;
  std::vector<SimpleFactorId> factors;  // factor-list certificate
  std::optional<SubgroupChain> chain;   // explicit-chain certificate
};

// Exact minimal faithful permutation degree, by minimizing the total index
// of a collection of subgroups whose cores intersect trivially (for simple
// groups this is the least index of a proper subgroup). nullopt when |G|
// exceeds the bound.
std::optional<unsigned> mu_exhaustive(const PermGroup &g, size_t bound = 2000);

// Width as the maximum of factor mu values. Factors with unknown mu degrade
// the confidence to upper-bound-only, using each realization's faithful
// degree as the bound.
WidthReport width_by_factors(const std::vector<SimpleFactorId> &factors);

struct WidthOptions {
  StructureOptions structure;
  bool solvable_cross_check = true;
};

// Theorem-based width: composition series, then the factor formula. For
// solvable groups the result is checked against the largest prime dividing
// the order.
WidthReport width(const PermGroup &g, const WidthOptions &opts = {});

// Brute-force oracle: exact minimum cost over all maximal subgroup chains,
// searched on the fully enumerated subgroup lattice, with a witness chain.
WidthReport width_oracle(const PermGroup &g, size_t bound = 2000);

// Width of a composed cover from the widths of its pieces (max, weaker
// confidence).
WidthReport decomposition_width(const WidthReport &w1, const WidthReport &w2);

// Largest prime dividing n; trial division (valid for orders of subgroups
// of S_d, whose prime factors are at most d).
unsigned largest_prime_factor(const mpz_class &n);

} // namespace gw

#endif
