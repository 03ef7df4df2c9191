#include "gw/lattice.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gw {

ElementTable ElementTable::build(const PermGroup &g, size_t bound) {
  mpz_class order = g.order();
  if (order > static_cast<unsigned long>(bound))
    throw std::runtime_error("group order exceeds element-table bound");
  size_t n = order.get_ui();
  if (n > 65535)
    throw std::runtime_error("element table limited to 65535 elements");

  ElementTable t;
  std::unordered_map<Perm, uint16_t, PermHash> index;
  t.elems.push_back(Perm(g.degree()));
  index.emplace(t.elems[0], 0);
  for (size_t qi = 0; qi < t.elems.size(); ++qi) {
    Perm cur = t.elems[qi];
    for (const Perm &s : g.generators()) {
      Perm nxt = cur * s;
      if (index.emplace(nxt, static_cast<uint16_t>(t.elems.size())).second)
        t.elems.push_back(std::move(nxt));
    }
  }
  if (t.elems.size() != n)
    throw std::logic_error("element enumeration disagrees with chain order");

  t.mult.resize(n * n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      t.mult[a * n + b] = index.at(t.elems[a] * t.elems[b]);
  t.inv.resize(n);
  t.order_of.assign(n, 1);
  t.prime_power.assign(n, false);
  for (size_t a = 0; a < n; ++a) {
    t.inv[a] = index.at(t.elems[a].inverse());
    uint32_t o = 1;
    uint16_t x = static_cast<uint16_t>(a);
    while (x != 0) {
      x = t.mult[static_cast<size_t>(x) * n + a];
      ++o;
    }
    if (a == 0)
      o = 1;
    t.order_of[a] = o;
    if (o > 1) {
      uint32_t m = o, p = 0;
      for (uint32_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
          p = d;
          break;
        }
      if (p == 0)
        p = m;
      while (m % p == 0)
        m /= p;
      t.prime_power[a] = (m == 1);
    }
  }
  for (const Perm &s : g.generators())
    t.gen_indices.push_back(index.at(s));
  return t;
}

SubgroupLattice::SubgroupLattice(ElementTable table) : table_(std::move(table)) {
  words_ = (table_.size() + 63) / 64;
  enumerate();
}

uint64_t SubgroupLattice::mask_hash(const Mask &m) const {
  uint64_t h = 0xcbf29ce484222325ull;
  for (uint64_t w : m) {
    h ^= w;
    h *= 0x100000001b3ull;
  }
  return h;
}

bool SubgroupLattice::subset(uint32_t a, uint32_t b) const {
  const Mask &ma = subs_[a].mask, &mb = subs_[b].mask;
  for (size_t i = 0; i < words_; ++i)
    if (ma[i] & ~mb[i])
      return false;
  return true;
}

uint32_t SubgroupLattice::index_of_mask(const Mask &m) const {
  auto it = by_hash_.find(mask_hash(m));
  if (it == by_hash_.end())
    return UINT32_MAX;
  for (uint32_t idx : it->second)
    if (subs_[idx].mask == m)
      return idx;
  return UINT32_MAX;
}

SubgroupLattice::Mask
SubgroupLattice::closure(const std::vector<uint16_t> &gens) const {
  Mask mask(words_, 0);
  std::vector<uint16_t> list;
  auto add = [&](uint16_t x) {
    if (!(mask[x >> 6] & (1ull << (x & 63)))) {
      mask[x >> 6] |= 1ull << (x & 63);
      list.push_back(x);
    }
  };
  add(0);
  for (uint16_t s : gens)
    add(s);
  for (size_t qi = 0; qi < list.size(); ++qi)
    for (uint16_t s : gens)
      add(table_.mul(list[qi], s));
  return mask;
}

SubgroupLattice::Mask SubgroupLattice::conjugate_mask(const Mask &m,
                                                      uint16_t c) const {
  Mask out(words_, 0);
  for (size_t w = 0; w < words_; ++w) {
    uint64_t bits = m[w];
    while (bits) {
      unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
      bits &= bits - 1;
      uint16_t x = static_cast<uint16_t>(w * 64 + b);
      uint16_t y = table_.conj(x, c);
      out[y >> 6] |= 1ull << (y & 63);
    }
  }
  return out;
}

uint32_t SubgroupLattice::register_sub(Sub sub) {
  uint64_t h = mask_hash(sub.mask);
  auto &bucket = by_hash_[h];
  for (uint32_t idx : bucket)
    if (subs_[idx].mask == sub.mask)
      return UINT32_MAX;
  uint32_t idx = static_cast<uint32_t>(subs_.size());
  bucket.push_back(idx);
  subs_.push_back(std::move(sub));
  return idx;
}

void SubgroupLattice::enumerate() {
  size_t n = table_.size();

  auto popcount = [&](const Mask &m) {
    uint32_t c = 0;
    for (uint64_t w : m)
      c += static_cast<uint32_t>(__builtin_popcountll(w));
    return c;
  };

  // Register a newly discovered subgroup together with its whole conjugacy
  // class; returns the class representative index, or UINT32_MAX if known.
  std::deque<uint32_t> frontier;
  auto discover = [&](Mask mask, std::vector<uint16_t> gens) -> void {
    Sub rep;
    rep.mask = std::move(mask);
    rep.gens = std::move(gens);
    rep.order = popcount(rep.mask);
    rep.class_id = static_cast<uint32_t>(class_reps_.size());
    rep.conjugator = 0;
    uint32_t rep_idx = register_sub(rep);
    if (rep_idx == UINT32_MAX)
      return;
    class_reps_.push_back(rep_idx);
    frontier.push_back(rep_idx);

    // close the conjugacy class under the group generators
    std::deque<uint32_t> work{rep_idx};
    while (!work.empty()) {
      uint32_t cur = work.front();
      work.pop_front();
      for (uint16_t c : table_.gen_indices) {
        Mask cm = conjugate_mask(subs_[cur].mask, c);
        if (index_of_mask(cm) != UINT32_MAX)
          continue;
        Sub conj;
        conj.mask = std::move(cm);
        conj.gens.reserve(subs_[cur].gens.size());
        for (uint16_t x : subs_[cur].gens)
          conj.gens.push_back(table_.conj(x, c));
        conj.order = subs_[cur].order;
        conj.class_id = subs_[rep_idx].class_id;
        conj.conjugator = table_.mul(c, subs_[cur].conjugator);
        uint32_t idx = register_sub(std::move(conj));
        if (idx != UINT32_MAX)
          work.push_back(idx);
      }
    }
  };

  discover(closure({}), {});

  while (!frontier.empty()) {
    uint32_t hi = frontier.front();
    frontier.pop_front();
    Mask covered = subs_[hi].mask;
    std::vector<uint16_t> base_gens = subs_[hi].gens;
    // member list of H for coset marking
    std::vector<uint16_t> members;
    for (size_t w = 0; w < words_; ++w) {
      uint64_t bits = subs_[hi].mask[w];
      while (bits) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
        bits &= bits - 1;
        members.push_back(static_cast<uint16_t>(w * 64 + b));
      }
    }
    for (uint16_t g = 1; g < n; ++g) {
      if (covered[g >> 6] & (1ull << (g & 63)))
        continue;
      if (!table_.prime_power[g])
        continue;
      std::vector<uint16_t> gens = base_gens;
      gens.push_back(g);
      Mask k = closure(gens);
      // joins with the same coset H*g produce the same subgroup
      for (uint16_t h : members) {
        uint16_t hg = table_.mul(h, g);
        covered[hg >> 6] |= 1ull << (hg & 63);
      }
      discover(std::move(k), std::move(gens));
    }
  }

  Mask all(words_, 0);
  for (size_t x = 0; x < n; ++x)
    all[x >> 6] |= 1ull << (x & 63);
  full_ = index_of_mask(all);
  if (full_ == UINT32_MAX)
    throw std::logic_error("lattice enumeration missed the full group");
}

std::vector<uint32_t> SubgroupLattice::proper_subgroups_of(uint32_t s) const {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < subs_.size(); ++i)
    if (i != s && subs_[i].order < subs_[s].order &&
        subs_[s].order % subs_[i].order == 0 && subset(i, s))
      out.push_back(i);
  return out;
}

std::vector<uint32_t> SubgroupLattice::maximal_subgroups_of(uint32_t s) const {
  std::vector<uint32_t> cand = proper_subgroups_of(s);
  std::sort(cand.begin(), cand.end(), [&](uint32_t a, uint32_t b) {
    return subs_[a].order > subs_[b].order;
  });
  std::vector<uint32_t> out;
  for (size_t i = 0; i < cand.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < i && maximal; ++j) {
      if (subs_[cand[j]].order > subs_[cand[i]].order &&
          subs_[cand[j]].order % subs_[cand[i]].order == 0 &&
          subset(cand[i], cand[j]))
        maximal = false;
    }
    if (maximal)
      out.push_back(cand[i]);
  }
  return out;
}

PermGroup SubgroupLattice::to_group(uint32_t s) const {
  std::vector<Perm> gens;
  for (uint16_t gi : subs_[s].gens)
    gens.push_back(table_.elems[gi]);
  unsigned degree = table_.elems[0].degree();
  if (gens.empty())
    gens.push_back(Perm(degree));
  return PermGroup(degree, std::move(gens));
}

} // namespace gw
