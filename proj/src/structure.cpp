#include "gw/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gw {

namespace {

PermGroup group_from(const PermGroup &like, std::vector<Perm> gens) {
  if (gens.empty())
    gens.push_back(Perm(like.degree()));
  return PermGroup(like.degree(), std::move(gens));
}

} // namespace

PermGroup normal_closure(const PermGroup &g, const std::vector<Perm> &elems) {
  for (const Perm &e : elems)
    if (!g.contains(e))
      throw std::invalid_argument("normal_closure: element outside the group");

  std::vector<Perm> gens;
  for (const Perm &e : elems)
    if (!e.is_identity())
      gens.push_back(e);
  if (gens.empty())
    return PermGroup::trivial(g.degree());

  mpz_class full_order = g.order();
  PermGroup n = group_from(g, gens);
  bool grew = true;
  while (grew) {
    if (n.order() == full_order)
      return n; // conjugation cannot grow past G
    grew = false;
    std::unordered_set<Perm, PermHash> added;
    for (const Perm &x : gens)
      for (const Perm &s : g.generators()) {
        Perm c = s * x * s.inverse();
        if (!n.contains(c))
          added.insert(c);
      }
    if (!added.empty()) {
      std::vector<Perm> fresh(added.begin(), added.end());
      std::sort(fresh.begin(), fresh.end());
      gens.insert(gens.end(), fresh.begin(), fresh.end());
      n = group_from(g, gens);
      grew = true;
    }
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup &g) {
  std::vector<Perm> comms;
  const auto &gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity())
        comms.push_back(c);
    }
  if (comms.empty())
    return PermGroup::trivial(g.degree());
  return normal_closure(g, comms);
}

bool is_solvable(const PermGroup &g) {
  PermGroup cur = g;
  mpz_class prev = cur.order();
  while (prev > 1) {
    cur = derived_subgroup(cur);
    mpz_class next = cur.order();
    if (next == prev)
      return false; // perfect and nontrivial
    prev = next;
  }
  return true;
}

namespace {

// Marks the whole conjugation orbit of `start` (indices into `elems`) as
// visited; elements are located through the index map.
template <typename IndexMap>
void mark_conjugacy_class(const PermGroup &g, const std::vector<Perm> &elems,
                          const IndexMap &index_of, size_t start,
                          std::vector<bool> &done) {
  std::vector<size_t> stack{start};
  done[start] = true;
  while (!stack.empty()) {
    size_t cur = stack.back();
    stack.pop_back();
    for (const Perm &s : g.generators()) {
      Perm c = s * elems[cur] * s.inverse();
      auto it = index_of.find(c);
      if (it != index_of.end() && !done[it->second]) {
        done[it->second] = true;
        stack.push_back(it->second);
      }
    }
  }
}

std::vector<Perm> sample_elements(const PermGroup &g,
                                  const StructureOptions &opts) {
  std::mt19937_64 rng(opts.seed ^ g.order().get_ui() ^ g.degree());
  std::vector<Perm> out;
  std::unordered_set<Perm, PermHash> seen;
  // generators, their powers of prime order, and random words
  auto push = [&](const Perm &p) {
    if (!p.is_identity() && seen.insert(p).second)
      out.push_back(p);
  };
  for (const Perm &s : g.generators()) {
    push(s);
    mpz_class ord = s.element_order();
    // prime-order powers of each generator
    for (unsigned p = 2; p <= 64; ++p) {
      if (mpz_divisible_ui_p(ord.get_mpz_t(), p)) {
        mpz_class e = ord / p;
        if (e.fits_ulong_p()) {
          Perm pw(g.degree());
          Perm base = s;
          unsigned long k = e.get_ui();
          while (k) {
            if (k & 1)
              pw = pw * base;
            base = base * base;
            k >>= 1;
          }
          push(pw);
        }
      }
    }
  }
  for (unsigned i = 0; i < opts.random_samples && out.size() < opts.random_samples; ++i)
    push(g.random_element(rng));
  return out;
}

} // namespace

bool is_simple(const PermGroup &g, const StructureOptions &opts) {
  mpz_class order = g.order();
  if (order == 1)
    throw std::invalid_argument("is_simple: trivial group");
  if (mpz_probab_prime_p(order.get_mpz_t(), 30) > 0)
    return true;

  if (order <= opts.exhaustive_bound) {
    std::vector<Perm> elems = g.elements(opts.exhaustive_bound + 1);
    std::unordered_map<Perm, size_t, PermHash> index_of;
    for (size_t i = 0; i < elems.size(); ++i)
      index_of.emplace(elems[i], i);
    std::vector<bool> done(elems.size(), false);
    for (size_t i = 0; i < elems.size(); ++i) {
      if (done[i] || elems[i].is_identity())
        continue;
      // one normal closure per conjugacy class suffices
      if (normal_closure(g, {elems[i]}).order() != order)
        return false;
      mark_conjugacy_class(g, elems, index_of, i, done);
    }
    return true;
  }

  // Randomized: every sampled element order is covered by construction
  // (samples include prime-order powers of all generators).
  for (const Perm &x : sample_elements(g, opts))
    if (normal_closure(g, {x}).order() != order)
      return false;
  return true;
}

std::optional<PermGroup> find_proper_normal(const PermGroup &g,
                                            const StructureOptions &opts) {
  mpz_class order = g.order();
  if (order == 1)
    throw std::invalid_argument("find_proper_normal: trivial group");
  if (mpz_probab_prime_p(order.get_mpz_t(), 30) > 0)
    return std::nullopt;

  auto proper_nontrivial = [&](const PermGroup &n) {
    mpz_class no = n.order();
    return no > 1 && no < order;
  };

  auto try_orbit_kernels = [&]() -> std::optional<PermGroup> {
    auto orbs = g.orbits();
    if (orbs.size() <= 1)
      return std::nullopt;
    for (const auto &orb : orbs) {
      if (orb.size() < 2)
        continue;
      PermGroup k = pointwise_stabilizer(g, orb);
      if (proper_nontrivial(k))
        return k;
    }
    return std::nullopt;
  };

  auto try_block_kernels = [&]() -> std::optional<PermGroup> {
    if (!g.is_transitive() || g.degree() <= 2)
      return std::nullopt;
    for (uint32_t b = 1; b < g.degree(); ++b) {
      BlockSystem sys = g.minimal_blocks(0, b);
      if (sys.trivial())
        continue;
      ActionImage act(g, sys.block_count, block_action_gens(g, sys));
      if (proper_nontrivial(act.kernel()))
        return act.kernel();
    }
    return std::nullopt;
  };

  auto try_derived = [&]() -> std::optional<PermGroup> {
    PermGroup der = derived_subgroup(g);
    if (proper_nontrivial(der))
      return der;
    return std::nullopt;
  };

  auto try_closures = [&]() -> std::optional<PermGroup> {
    // normal closures of elements, smallest found preferred
    std::optional<PermGroup> best;
    auto consider = [&](const Perm &x) {
      if (x.is_identity())
        return;
      PermGroup n = normal_closure(g, {x});
      if (proper_nontrivial(n) && (!best || n.order() < best->order()))
        best = n;
    };
    if (order <= opts.exhaustive_bound) {
      std::vector<Perm> elems = g.elements(opts.exhaustive_bound + 1);
      std::unordered_map<Perm, size_t, PermHash> index_of;
      for (size_t i = 0; i < elems.size(); ++i)
        index_of.emplace(elems[i], i);
      std::vector<bool> done(elems.size(), false);
      for (size_t i = 0; i < elems.size(); ++i) {
        if (done[i] || elems[i].is_identity())
          continue;
        consider(elems[i]);
        mark_conjugacy_class(g, elems, index_of, i, done);
      }
    } else {
      for (const Perm &x : sample_elements(g, opts))
        consider(x);
    }
    return best;
  };

  for (NormalTactic tactic : opts.tactics) {
    std::optional<PermGroup> found;
    switch (tactic) {
    case NormalTactic::orbit_kernel: found = try_orbit_kernels(); break;
    case NormalTactic::block_kernel: found = try_block_kernels(); break;
    case NormalTactic::derived:      found = try_derived(); break;
    case NormalTactic::closures:     found = try_closures(); break;
    }
    if (found)
      return found;
  }
  return std::nullopt;
}

QuotientRealization quotient(const PermGroup &g, const PermGroup &n,
                             const StructureOptions &opts) {
  mpz_class go = g.order(), no = n.order();
  if (!n.is_subgroup_of(g))
    throw std::invalid_argument("quotient: N is not a subgroup of G");
  for (const Perm &x : n.generators())
    for (const Perm &s : g.generators())
      if (!n.contains(s * x * s.inverse()))
        throw std::invalid_argument("quotient: N is not normal in G");

  QuotientRealization out;

  if (no == go) {
    // G/G is trivial
    out.quotient = PermGroup::trivial(1);
    out.kernel_witness = g;
    out.projected_gens.assign(g.generators().size(), Perm(1));
    out.lift = [g](const Perm &) { return Perm(g.degree()); };
    return out;
  }
  if (no == 1) {
    // G/1 is G itself
    out.quotient = g;
    out.kernel_witness = PermGroup::trivial(g.degree());
    out.projected_gens = g.generators();
    out.lift = [](const Perm &s) { return s; };
    return out;
  }

  auto try_action = [&](unsigned m,
                        const std::vector<Perm> &imgs) -> bool {
    auto act = std::make_shared<ActionImage>(g, m, imgs);
    if (act->kernel().order() != no || !act->kernel().is_subgroup_of(n))
      return false;
    out.quotient = act->image();
    out.kernel_witness = act->kernel();
    out.projected_gens = imgs;
    out.lift = [act](const Perm &s) { return act->lift(s); };
    return true;
  };

  if (!n.is_trivial()) {
    // preferred: an orbit action with kernel exactly N
    for (const auto &orb : g.orbits()) {
      if (orb.size() < 2 || orb.size() == g.degree())
        continue;
      if (try_action(static_cast<unsigned>(orb.size()),
                     orbit_action_gens(g, orb)))
        return out;
    }
    // block actions
    if (g.is_transitive()) {
      std::unordered_set<uint32_t> seen_counts;
      for (uint32_t b = 1; b < g.degree(); ++b) {
        BlockSystem sys = g.minimal_blocks(0, b);
        if (sys.trivial() || !seen_counts.insert(sys.block_count).second)
          continue;
        if (try_action(sys.block_count, block_action_gens(g, sys)))
          return out;
      }
    }
  }

  // fallback: left-coset action (kernel is the core of N, which equals N
  // by normality)
  mpz_class index = go / no;
  if (index > static_cast<unsigned long>(opts.coset_cap))
    throw std::runtime_error(
        "quotient: index exceeds coset-action cap and no small action exists");
  auto imgs = coset_action_gens(g, n, opts.coset_cap);
  if (!try_action(static_cast<unsigned>(imgs.front().degree()), imgs))
    throw std::logic_error("coset action kernel mismatch");
  return out;
}

std::vector<SimpleFactorId> CompositionSeries::factors() const {
  std::vector<SimpleFactorId> out;
  for (const Link &l : links)
    out.push_back(l.factor);
  return out;
}

void CompositionSeries::verify(const StructureOptions &opts) const {
  if (!complete)
    throw std::runtime_error("series incomplete: " + failure);
  const PermGroup *above = &group;
  mpz_class above_order = group.order();
  for (const Link &l : links) {
    mpz_class below_order = l.subgroup.order();
    if (below_order == 0 || above_order % below_order != 0)
      throw std::runtime_error("series: order does not divide");
    if (above_order / below_order != l.factor.order)
      throw std::runtime_error("series: factor order mismatch");
    if (!l.subgroup.is_subgroup_of(*above))
      throw std::runtime_error("series: link is not a subgroup");
    for (const Perm &x : l.subgroup.generators())
      for (const Perm &s : above->generators())
        if (!l.subgroup.contains(s * x * s.inverse()))
          throw std::runtime_error("series: link is not normal");
    above = &l.subgroup;
    above_order = below_order;
  }
  if (above_order != 1)
    throw std::runtime_error("series: chain does not reach the identity");
  // simplicity of small factors via the realized quotients
  StructureOptions sub = opts;
  const PermGroup *top = &group;
  for (const Link &l : links) {
    mpz_class fo = l.factor.order;
    if (fo > 1 && fo <= sub.exhaustive_bound) {
      QuotientRealization q = quotient(*top, l.subgroup, sub);
      if (!is_simple(q.quotient, sub))
        throw std::runtime_error("series: factor is not simple");
    }
    top = &l.subgroup;
  }
}

CompositionSeries composition_series(const PermGroup &g,
                                     const StructureOptions &opts,
                                     std::vector<SeriesSplit> *recursion_pairs) {
  CompositionSeries out;
  out.group = g;
  if (g.order() == 1)
    return out;

  std::optional<PermGroup> n = find_proper_normal(g, opts);
  if (!n) {
    SimpleFactorId id = identify_simple(g, opts.table_bound, opts.mu_bound);
    CompositionSeries::Link link;
    link.subgroup = PermGroup::trivial(g.degree());
    link.factor = id;
    out.links.push_back(std::move(link));
    return out;
  }

  QuotientRealization q;
  try {
    q = quotient(g, *n, opts);
  } catch (const std::exception &e) {
    // cap exceeded: return what is known so far, explicitly marked
    out.complete = false;
    out.failure = e.what();
    return out;
  }
  if (recursion_pairs)
    recursion_pairs->push_back({g, *n, q.quotient});

  CompositionSeries qs = composition_series(q.quotient, opts, recursion_pairs);
  CompositionSeries ns = composition_series(*n, opts, recursion_pairs);
  if (!qs.complete || !ns.complete) {
    out.complete = false;
    out.failure = qs.complete ? ns.failure : qs.failure;
  }

  // Lift the quotient series: subgroup below each quotient link is the
  // preimage <N, lifts of link generators>.
  for (size_t i = 0; i < qs.links.size(); ++i) {
    CompositionSeries::Link link;
    link.factor = qs.links[i].factor;
    if (qs.links[i].subgroup.is_trivial()) {
      link.subgroup = *n;
    } else {
      std::vector<Perm> gens = n->generators();
      for (const Perm &s : qs.links[i].subgroup.generators())
        if (!s.is_identity())
          gens.push_back(q.lift(s));
      link.subgroup = PermGroup(g.degree(), std::move(gens));
    }
    out.links.push_back(std::move(link));
  }
  for (const auto &l : ns.links)
    out.links.push_back(l);
  return out;
}

} // namespace gw
