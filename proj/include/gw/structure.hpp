#ifndef GW_STRUCTURE_HPP
#define GW_STRUCTURE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "gw/action.hpp"
#include "gw/perm_group.hpp"
#include "gw/simple_factor.hpp"

namespace gw {

enum class NormalTactic { orbit_kernel, block_kernel, derived, closures };

struct StructureOptions {
  size_t coset_cap = 100000;        // index cap for coset actions
  size_t exhaustive_bound = 10000;  // element enumeration bound
  unsigned random_samples = 48;     // closure samples above the bound
  unsigned long table_bound = 1000000;
  unsigned long mu_bound = 2000;
  uint64_t seed = 0x67616c6f6973ull; // deterministic sampling
  // Jordan-Hoelder makes the factor multiset independent of this order;
  // tests shuffle it.
  std::vector<NormalTactic> tactics = {
      NormalTactic::orbit_kernel, NormalTactic::block_kernel,
      NormalTactic::derived, NormalTactic::closures};
};

// Smallest normal subgroup of g containing the given elements.
PermGroup normal_closure(const PermGroup &g, const std::vector<Perm> &elems);

PermGroup derived_subgroup(const PermGroup &g);

bool is_solvable(const PermGroup &g);

// True iff the normal closure of every nontrivial element is the whole
// group; exhaustive over conjugacy classes when |G| <= exhaustive_bound,
// randomized with `random_samples` elements (covering every sampled element
// order) otherwise. Throws on the trivial group.
bool is_simple(const PermGroup &g, const StructureOptions &opts = {});

// A nontrivial proper normal subgroup, or nullopt when none is found
// (declaring g simple). Tactics in order: kernel of the action on a
// nontrivial orbit, kernel of the action on a minimal block system, derived
// subgroup, normal closures of elements (smallest found preferred).
std::optional<PermGroup> find_proper_normal(const PermGroup &g,
                                            const StructureOptions &opts = {});

struct QuotientRealization {
  PermGroup quotient;
  PermGroup kernel_witness;
  std::vector<Perm> projected_gens;          // images of parent generators
  std::function<Perm(const Perm &)> lift;    // section quotient -> parent
};

// Realize G/N as a permutation group, preferring an orbit or block action
// with kernel exactly N, falling back to the action on left cosets of N
// when [G:N] <= coset_cap.
QuotientRealization quotient(const PermGroup &g, const PermGroup &n,
                             const StructureOptions &opts = {});

struct CompositionSeries {
  // Chain G = N_0 |> N_1 |> ... |> N_k = 1; links[i] holds N_{i+1} plus the
  // simple type of N_i / N_{i+1}.
  struct Link {
    PermGroup subgroup; // N_{i+1}
    SimpleFactorId factor;
  };
  PermGroup group;
  std::vector<Link> links;
  // Set when a quotient realization hit the coset-action cap: the series
  // holds only the links established up to that point.
  bool complete = true;
  std::string failure;

  std::vector<SimpleFactorId> factors() const;
  // Conjugation-based normality and order checks for every link; simplicity
  // of small factors is rechecked. Throws on violation or incompleteness.
  void verify(const StructureOptions &opts = {}) const;
};

// Recursive composition series: find a proper normal subgroup, recurse on it
// and on the quotient, splice the lifted quotient series on top.
// `recursion_pairs`, when given, records every (G, N, G/N) split.
struct SeriesSplit {
  PermGroup group;
  PermGroup normal;
  PermGroup quotient;
};

CompositionSeries
composition_series(const PermGroup &g, const StructureOptions &opts = {},
                   std::vector<SeriesSplit> *recursion_pairs = nullptr);

} // namespace gw

#endif
