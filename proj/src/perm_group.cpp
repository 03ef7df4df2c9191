#include "gw/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace gw {

// ---------------------------------------------------------------------------
// StabChain

StabChain::StabChain(unsigned degree, const std::vector<Perm> &gens,
                     const std::vector<uint32_t> &prescribed_base)
    : degree_(degree) {
  for (const Perm &g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
  build(gens, prescribed_base);
}

void StabChain::add_level(uint32_t beta) {
  Level lvl;
  lvl.beta = beta;
  lvl.parent.assign(degree_, -1);
  lvl.edge_gen.assign(degree_, -1);
  lvl.orbit = {beta};
  lvl.parent[beta] = static_cast<int32_t>(beta);
  levels_.push_back(std::move(lvl));
}

void StabChain::attach_gen(size_t level_from, size_t level_to,
                           uint32_t gen_idx) {
  for (size_t i = level_from; i <= level_to && i < levels_.size(); ++i)
    levels_[i].gen_indices.push_back(gen_idx);
}

void StabChain::recompute_orbit(size_t level) {
  Level &lvl = levels_[level];
  lvl.parent.assign(degree_, -1);
  lvl.edge_gen.assign(degree_, -1);
  lvl.orbit.clear();
  lvl.orbit.push_back(lvl.beta);
  lvl.parent[lvl.beta] = static_cast<int32_t>(lvl.beta);
  lvl.cached = degree_ <= kTransversalCacheDegree;
  if (lvl.cached) {
    lvl.trans.assign(degree_, Perm());
    lvl.trans_inv.assign(degree_, Perm());
    lvl.trans[lvl.beta] = Perm(degree_);
    lvl.trans_inv[lvl.beta] = Perm(degree_);
  }
  for (size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
    uint32_t x = lvl.orbit[qi];
    for (uint32_t gi : lvl.gen_indices) {
      uint32_t y = sgens_[gi][x];
      if (lvl.parent[y] < 0) {
        lvl.parent[y] = static_cast<int32_t>(x);
        lvl.edge_gen[y] = static_cast<int32_t>(gi);
        lvl.orbit.push_back(y);
        if (lvl.cached) {
          lvl.trans[y] = sgens_[gi] * lvl.trans[x];
          lvl.trans_inv[y] = lvl.trans_inv[x] * sgen_invs_[gi];
        }
      }
    }
  }
}

uint32_t StabChain::pick_new_base(const Perm &r) const {
  for (uint32_t i = 0; i < degree_; ++i)
    if (r[i] != i)
      return i;
  throw std::logic_error("identity residue cannot supply a base point");
}

Perm StabChain::transversal(size_t level, uint32_t point) const {
  const Level &lvl = levels_[level];
  if (lvl.parent[point] < 0)
    throw std::invalid_argument("point outside fundamental orbit");
  if (lvl.cached)
    return lvl.trans[point];
  std::vector<uint32_t> edges;
  uint32_t x = point;
  while (x != lvl.beta) {
    edges.push_back(static_cast<uint32_t>(lvl.edge_gen[x]));
    x = static_cast<uint32_t>(lvl.parent[x]);
  }
  Perm u(degree_);
  for (auto it = edges.rbegin(); it != edges.rend(); ++it)
    u = sgens_[*it] * u;
  return u;
}

Perm StabChain::transversal_inv(size_t level, uint32_t point) const {
  const Level &lvl = levels_[level];
  if (lvl.parent[point] < 0)
    throw std::invalid_argument("point outside fundamental orbit");
  if (lvl.cached)
    return lvl.trans_inv[point];
  return transversal(level, point).inverse();
}

bool StabChain::in_orbit(size_t level, uint32_t point) const {
  return levels_[level].parent[point] >= 0;
}

std::pair<Perm, size_t> StabChain::sift(const Perm &g, size_t from) const {
  Perm r = g;
  for (size_t i = from; i < levels_.size(); ++i) {
    uint32_t delta = r[levels_[i].beta];
    if (delta == levels_[i].beta)
      continue;
    if (levels_[i].parent[delta] < 0)
      return {r, i};
    r = transversal_inv(i, delta) * r;
  }
  return {r, levels_.size()};
}

void StabChain::build(const std::vector<Perm> &gens,
                      const std::vector<uint32_t> &prescribed_base) {
  for (uint32_t b : prescribed_base) {
    if (b >= degree_)
      throw std::invalid_argument("prescribed base point exceeds degree");
    add_level(b);
  }

  auto insert_gen = [&](const Perm &g, size_t at_level) {
    // g fixes base points of levels [0, at_level); attach it to every level
    // up to the first one whose base point it moves, creating that level if
    // none of the existing ones qualifies.
    uint32_t gi = static_cast<uint32_t>(sgens_.size());
    sgens_.push_back(g);
    sgen_invs_.push_back(g.inverse());
    size_t j = at_level;
    while (j < levels_.size() && g[levels_[j].beta] == levels_[j].beta)
      ++j;
    if (j == levels_.size())
      add_level(pick_new_base(g));
    attach_gen(at_level, j, gi);
    for (size_t i = at_level; i <= j; ++i)
      recompute_orbit(i);
    return j;
  };

  bool nontrivial = false;
  for (const Perm &g : gens) {
    if (!g.is_identity()) {
      insert_gen(g, 0);
      nontrivial = true;
    }
  }
  if (!nontrivial)
    return; // trivial group: prescribed levels (if any) stay with unit orbits

  // Deterministic closure: verify Schreier generators level by level from
  // the deepest up; any nontrivial residue is inserted at its level and
  // processing restarts there.
  size_t i = levels_.size();
  while (i-- > 0) {
  restart_level:
    recompute_orbit(i);
    const Level &lvl = levels_[i];
    for (size_t oi = 0; oi < lvl.orbit.size(); ++oi) {
      uint32_t x = lvl.orbit[oi];
      Perm ux = transversal(i, x);
      for (size_t gii = 0; gii < lvl.gen_indices.size(); ++gii) {
        uint32_t gi = lvl.gen_indices[gii];
        const Perm &s = sgens_[gi];
        uint32_t sx = s[x];
        Perm sg = transversal_inv(i, sx) * (s * ux);
        if (sg.is_identity())
          continue;
        auto [residue, fail_level] = sift(sg, i + 1);
        if (residue.is_identity())
          continue;
        size_t j = insert_gen(residue, i + 1);
        i = j;
        goto restart_level;
      }
    }
  }
}

mpz_class StabChain::order() const {
  mpz_class o = 1;
  for (const Level &lvl : levels_)
    o *= static_cast<unsigned long>(lvl.orbit.size());
  return o;
}

mpz_class StabChain::level_order(size_t level) const {
  mpz_class o = 1;
  for (size_t i = level; i < levels_.size(); ++i)
    o *= static_cast<unsigned long>(levels_[i].orbit.size());
  return o;
}

bool StabChain::contains(const Perm &g) const {
  if (g.degree() != degree_)
    throw std::invalid_argument("degree mismatch in membership test");
  auto [r, lvl] = sift(g);
  return lvl == levels_.size() && r.is_identity();
}

std::vector<Perm> StabChain::level_generators(size_t level) const {
  std::vector<Perm> out;
  std::unordered_set<uint32_t> taken;
  for (size_t i = level; i < levels_.size(); ++i)
    for (uint32_t gi : levels_[i].gen_indices)
      if (taken.insert(gi).second)
        out.push_back(sgens_[gi]);
  if (out.empty())
    out.push_back(Perm(degree_));
  return out;
}

// ---------------------------------------------------------------------------
// BlockSystem

std::vector<std::vector<uint32_t>> BlockSystem::blocks() const {
  std::vector<std::vector<uint32_t>> out(block_count);
  for (uint32_t p = 0; p < block_of.size(); ++p)
    out[block_of[p]].push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(unsigned degree, std::vector<Perm> gens) {
  if (degree == 0)
    throw std::invalid_argument("group degree must be >= 1");
  for (const Perm &g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
  if (gens.empty())
    gens.push_back(Perm(degree));
  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->gens = std::move(gens);
  data_ = std::move(d);
}

PermGroup PermGroup::trivial(unsigned degree) {
  return PermGroup(degree, {Perm(degree)});
}

const StabChain &PermGroup::chain() const {
  std::call_once(data_->chain_once, [this] {
    data_->chain = std::make_unique<StabChain>(data_->degree, data_->gens);
  });
  return *data_->chain;
}

bool PermGroup::contains(const Perm &g) const {
  if (g.degree() != degree())
    throw std::invalid_argument("degree mismatch in membership test");
  return chain().contains(g);
}

bool PermGroup::is_trivial() const {
  for (const Perm &g : generators())
    if (!g.is_identity())
      return false;
  return true;
}

std::vector<std::vector<uint32_t>> PermGroup::orbits() const {
  std::vector<int32_t> orbit_of(degree(), -1);
  std::vector<std::vector<uint32_t>> out;
  for (uint32_t s = 0; s < degree(); ++s) {
    if (orbit_of[s] >= 0)
      continue;
    int32_t id = static_cast<int32_t>(out.size());
    std::vector<uint32_t> orb{s};
    orbit_of[s] = id;
    for (size_t qi = 0; qi < orb.size(); ++qi)
      for (const Perm &g : generators()) {
        uint32_t y = g[orb[qi]];
        if (orbit_of[y] < 0) {
          orbit_of[y] = id;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return orbits().size() == 1;
}

BlockSystem PermGroup::minimal_blocks(uint32_t a, uint32_t b) const {
  if (!is_transitive())
    throw std::invalid_argument("minimal_blocks requires a transitive group");
  if (a == b || a >= degree() || b >= degree())
    throw std::invalid_argument("seed points must be distinct valid points");

  // Atkinson's algorithm: close the partition generated by {a,b} under the
  // generator action.
  std::vector<uint32_t> uf(degree());
  for (uint32_t i = 0; i < degree(); ++i)
    uf[i] = i;
  std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  };
  std::deque<std::pair<uint32_t, uint32_t>> queue{{a, b}};
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    uint32_t rx = find(x), ry = find(y);
    if (rx == ry)
      continue;
    uf[ry] = rx;
    for (const Perm &g : generators())
      queue.emplace_back(g[rx], g[ry]);
  }

  BlockSystem sys;
  sys.block_of.assign(degree(), 0);
  std::vector<int32_t> id_of(degree(), -1);
  uint32_t next = 0;
  for (uint32_t p = 0; p < degree(); ++p) {
    uint32_t r = find(p);
    if (id_of[r] < 0)
      id_of[r] = static_cast<int32_t>(next++);
    sys.block_of[p] = static_cast<uint32_t>(id_of[r]);
  }
  sys.block_count = next;
  return sys;
}

bool PermGroup::is_even_subgroup() const {
  for (const Perm &g : generators())
    if (!g.is_even())
      return false;
  return true;
}

std::vector<Perm> PermGroup::elements(size_t limit) const {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out;
  out.push_back(Perm(degree()));
  seen.insert(out.front());
  for (size_t qi = 0; qi < out.size(); ++qi) {
    Perm cur = out[qi];
    for (const Perm &g : generators()) {
      Perm nxt = cur * g;
      if (seen.insert(nxt).second) {
        if (out.size() >= limit)
          throw std::runtime_error("element enumeration limit exceeded");
        out.push_back(std::move(nxt));
      }
    }
  }
  return out;
}

Perm PermGroup::random_element(std::mt19937_64 &rng) const {
  // Random word over generators and inverses; length scales with the chain
  // depth so that deep stabilizer structure gets mixed.
  const auto &gens = generators();
  std::uniform_int_distribution<size_t> pick(0, gens.size() * 2 - 1);
  size_t len = 20 + 2 * chain().num_levels();
  Perm w(degree());
  for (size_t i = 0; i < len; ++i) {
    size_t k = pick(rng);
    w = (k < gens.size() ? gens[k] : gens[k - gens.size()].inverse()) * w;
  }
  return w;
}

bool PermGroup::is_subgroup_of(const PermGroup &g) const {
  if (degree() != g.degree())
    return false;
  for (const Perm &s : generators())
    if (!g.contains(s))
      return false;
  return true;
}

bool PermGroup::same_group(const PermGroup &g) const {
  return is_subgroup_of(g) && order() == g.order();
}

} // namespace gw
