#include "gw/width.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gw/lattice.hpp"

namespace gw {

bool SubgroupChain::strict() const {
  for (const mpz_class &i : indices)
    if (i < 2)
      return false;
  return true;
}

void SubgroupChain::validate() const {
  if (links.empty())
    throw std::runtime_error("chain has no links");
  if (indices.size() + 1 != links.size())
    throw std::runtime_error("chain index count mismatch");
  for (size_t i = 0; i + 1 < links.size(); ++i) {
    if (!links[i + 1].is_subgroup_of(links[i]))
      throw std::runtime_error("chain link is not a subgroup");
    if (links[i].order() != indices[i] * links[i + 1].order())
      throw std::runtime_error("chain index mismatch");
  }
  if (!links.back().is_trivial())
    throw std::runtime_error("chain does not end at the identity");
}

mpz_class chain_cost(const SubgroupChain &c) {
  mpz_class cost = 1;
  for (const mpz_class &i : c.indices)
    cost = std::max(cost, i);
  return cost;
}

SubgroupChain stabilizer_chain(const PermGroup &g) {
  if (!g.is_transitive())
    throw std::invalid_argument("stabilizer_chain requires a transitive group");
  std::vector<uint32_t> base(g.degree());
  std::iota(base.begin(), base.end(), 0u);
  StabChain chain(g.degree(), g.generators(), base);

  SubgroupChain out;
  out.links.push_back(g);
  mpz_class cur_order = g.order();
  for (size_t lvl = 0; lvl < chain.num_levels(); ++lvl) {
    size_t orb = chain.orbit_size(lvl);
    if (orb <= 1)
      continue;
    PermGroup stab(g.degree(), chain.level_generators(lvl + 1));
    out.indices.push_back(static_cast<unsigned long>(orb));
    out.links.push_back(stab);
    cur_order /= static_cast<unsigned long>(orb);
  }
  if (cur_order != 1)
    throw std::logic_error("stabilizer chain did not reach the identity");
  if (!out.links.back().is_trivial())
    out.links.back() = PermGroup::trivial(g.degree());
  return out;
}

const char *confidence_name(Confidence c) {
  switch (c) {
  case Confidence::proved: return "proved";
  case Confidence::heuristic_lower_bound: return "heuristic-lower-bound";
  case Confidence::upper_bound_only: return "upper-bound-only";
  }
  return "?";
}

unsigned largest_prime_factor(const mpz_class &n) {
  mpz_class m = n;
  unsigned best = 1;
  for (unsigned p = 2;; ++p) {
    mpz_class pp = p;
    if (pp * pp > m)
      break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      best = p;
      m /= p;
    }
  }
  if (m > 1) {
    if (!m.fits_uint_p())
      throw std::runtime_error("prime factor too large");
    best = std::max(best, static_cast<unsigned>(m.get_ui()));
  }
  return best;
}

std::optional<unsigned> mu_exhaustive(const PermGroup &g, size_t bound) {
  mpz_class order = g.order();
  if (order > static_cast<unsigned long>(bound))
    return std::nullopt;
  if (order == 1)
    return 1u; // the trivial action on one point

  SubgroupLattice lat(ElementTable::build(g, bound));
  const auto &subs = lat.subs();
  size_t n = lat.table().size();

  // Core of each subgroup = intersection over its conjugacy class; the
  // kernel of the coset action on G/H is core(H), so a union of coset
  // actions is faithful iff the cores intersect trivially.
  std::map<SubgroupLattice::Mask, unsigned long> best_index_for_core;
  std::vector<SubgroupLattice::Mask> class_core(lat.class_reps().size());
  {
    std::vector<bool> seen(lat.class_reps().size(), false);
    for (const auto &sub : subs) {
      auto &core = class_core[sub.class_id];
      if (core.empty())
        core.assign(sub.mask.size(), ~0ull);
      for (size_t w = 0; w < sub.mask.size(); ++w)
        core[w] &= sub.mask[w];
      (void)seen;
    }
    for (uint32_t rep : lat.class_reps()) {
      const auto &sub = subs[rep];
      unsigned long index = static_cast<unsigned long>(n / sub.order);
      auto &best = best_index_for_core[class_core[sub.class_id]];
      if (best == 0 || index < best)
        best = index;
    }
  }

  // Dijkstra over intersections of cores: state = current kernel, edge =
  // adjoin one more coset action.
  std::map<SubgroupLattice::Mask, unsigned long> dist;
  SubgroupLattice::Mask full(lat.subs()[lat.full_group()].mask);
  SubgroupLattice::Mask trivial_mask(full.size(), 0);
  trivial_mask[0] = 1; // identity element only
  dist[full] = 0;
  using Entry = std::pair<unsigned long, SubgroupLattice::Mask>;
  std::vector<Entry> heap{{0, full}};
  auto cmp = [](const Entry &a, const Entry &b) { return a.first > b.first; };
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), cmp);
    Entry cur = heap.back();
    heap.pop_back();
    auto it = dist.find(cur.second);
    if (it != dist.end() && it->second < cur.first)
      continue;
    if (cur.second == trivial_mask)
      return static_cast<unsigned>(cur.first);
    for (const auto &[core, index] : best_index_for_core) {
      SubgroupLattice::Mask next(cur.second.size());
      bool changed = false;
      for (size_t w = 0; w < next.size(); ++w) {
        next[w] = cur.second[w] & core[w];
        changed |= next[w] != cur.second[w];
      }
      if (!changed)
        continue;
      unsigned long nd = cur.first + index;
      auto jt = dist.find(next);
      if (jt == dist.end() || nd < jt->second) {
        dist[next] = nd;
        heap.emplace_back(nd, next);
        std::push_heap(heap.begin(), heap.end(), cmp);
      }
    }
  }
  throw std::logic_error("mu search did not reach a faithful collection");
}

WidthReport width_by_factors(const std::vector<SimpleFactorId> &factors) {
  WidthReport out;
  out.factors = factors;
  out.width = 1;
  out.confidence = Confidence::proved;
  for (const SimpleFactorId &f : factors) {
    if (f.mu) {
      out.width = std::max(out.width, *f.mu);
    } else {
      out.confidence = Confidence::upper_bound_only;
      if (f.degree_bound)
        out.width = std::max(out.width, *f.degree_bound);
    }
  }
  return out;
}

WidthReport width(const PermGroup &g, const WidthOptions &opts) {
  CompositionSeries series = composition_series(g, opts.structure);
  if (!series.complete)
    throw std::runtime_error("width unavailable: " + series.failure);
  WidthReport report = width_by_factors(series.factors());
  if (opts.solvable_cross_check && report.confidence == Confidence::proved &&
      is_solvable(g)) {
    unsigned lp = g.order() == 1 ? 1 : largest_prime_factor(g.order());
    if (report.width != lp)
      throw std::logic_error(
          "solvable width must equal the largest prime dividing the order");
  }
  return report;
}

WidthReport width_oracle(const PermGroup &g, size_t bound) {
  SubgroupLattice lat(ElementTable::build(g, bound));
  const auto &subs = lat.subs();

  // Width is conjugation-invariant, so the minimax over maximal chains is
  // computed once per conjugacy class of subgroups, in increasing order.
  std::vector<uint32_t> reps_by_order = lat.class_reps();
  std::sort(reps_by_order.begin(), reps_by_order.end(),
            [&](uint32_t a, uint32_t b) {
              return subs[a].order < subs[b].order;
            });

  std::vector<unsigned long> botn(lat.class_reps().size(), 0);
  std::vector<uint32_t> choice(lat.class_reps().size(), UINT32_MAX);
  for (uint32_t rep : reps_by_order) {
    uint32_t cls = subs[rep].class_id;
    if (subs[rep].order == 1) {
      botn[cls] = 1;
      continue;
    }
    unsigned long best = 0;
    uint32_t best_max = UINT32_MAX;
    for (uint32_t m : lat.maximal_subgroups_of(rep)) {
      unsigned long index = subs[rep].order / subs[m].order;
      unsigned long cost = std::max(index, botn[subs[m].class_id]);
      if (best == 0 || cost < best) {
        best = cost;
        best_max = m;
      }
    }
    botn[cls] = best;
    choice[cls] = best_max;
  }

  // Witness chain: repeatedly descend into the chosen maximal subgroup,
  // conjugating the class representative's choice into the current frame.
  SubgroupChain chain;
  uint32_t cur = lat.full_group();
  chain.links.push_back(lat.to_group(cur));
  while (subs[cur].order > 1) {
    uint32_t cls = subs[cur].class_id;
    uint32_t chosen_for_rep = choice[cls];
    uint16_t c = subs[cur].conjugator;
    auto mask = lat.conjugate_mask(subs[chosen_for_rep].mask, c);
    uint32_t next = lat.index_of_mask(mask);
    if (next == UINT32_MAX)
      throw std::logic_error("conjugate of a lattice member must be present");
    chain.indices.push_back(
        static_cast<unsigned long>(subs[cur].order / subs[next].order));
    chain.links.push_back(lat.to_group(next));
    cur = next;
  }

  WidthReport out;
  out.width = static_cast<unsigned>(botn[subs[lat.full_group()].class_id]);
  out.confidence = Confidence::proved;
  out.chain = std::move(chain);
  if (chain_cost(*out.chain) != out.width)
    throw std::logic_error("oracle witness chain does not attain the width");
  return out;
}

WidthReport decomposition_width(const WidthReport &w1, const WidthReport &w2) {
  WidthReport out;
  out.width = std::max(w1.width, w2.width);
  out.confidence = std::max(w1.confidence, w2.confidence);
  const WidthReport &src = w1.width >= w2.width ? w1 : w2;
  out.factors = src.factors;
  out.chain = src.chain;
  return out;
}

} // namespace gw
