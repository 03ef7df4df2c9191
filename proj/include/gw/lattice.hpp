#ifndef GW_LATTICE_HPP
#define GW_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gw/perm_group.hpp"

namespace gw {

// Complete multiplication table of a small group. Element 0 is the identity;
// the element list is the deterministic closure BFS order.
struct ElementTable {
  std::vector<Perm> elems;
  std::vector<uint16_t> mult;      // mult[a*n+b] = index of elems[a]*elems[b]
  std::vector<uint16_t> inv;
  std::vector<uint32_t> order_of;
  std::vector<bool> prime_power;   // element order is a prime power (> 1)
  std::vector<uint16_t> gen_indices; // indices of the group's generators

  size_t size() const { return elems.size(); }
  uint16_t mul(uint16_t a, uint16_t b) const {
    return mult[static_cast<size_t>(a) * elems.size() + b];
  }
  uint16_t conj(uint16_t x, uint16_t c) const {
    return mul(mul(c, x), inv[c]); // c x c^-1
  }

  // Throws if |G| exceeds the bound.
  static ElementTable build(const PermGroup &g, size_t bound);
};

// Every subgroup of a small group, found by closing class representatives
// under single-element joins (prime-power-order elements suffice since any
// element generates the product of its prime-power parts). Full conjugacy
// classes are stored so containment queries see the whole lattice.
class SubgroupLattice {
public:
  using Mask = std::vector<uint64_t>;

  struct Sub {
    Mask mask;
    std::vector<uint16_t> gens;
    uint32_t order = 0;
    uint32_t class_id = 0;
    uint16_t conjugator = 0; // c with this = c * rep(class) * c^-1
  };

  explicit SubgroupLattice(ElementTable table);

  const ElementTable &table() const { return table_; }
  const std::vector<Sub> &subs() const { return subs_; }
  const std::vector<uint32_t> &class_reps() const { return class_reps_; }
  uint32_t full_group() const { return full_; }
  uint32_t trivial_group() const { return 0; }

  bool subset(uint32_t a, uint32_t b) const; // subs_[a] inside subs_[b]
  uint32_t index_of_mask(const Mask &m) const;

  std::vector<uint32_t> proper_subgroups_of(uint32_t s) const;
  std::vector<uint32_t> maximal_subgroups_of(uint32_t s) const;

  Mask conjugate_mask(const Mask &m, uint16_t c) const;
  PermGroup to_group(uint32_t s) const;

private:
  ElementTable table_;
  size_t words_ = 0;
  std::vector<Sub> subs_;
  std::vector<uint32_t> class_reps_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> by_hash_;
  uint32_t full_ = 0;

  uint64_t mask_hash(const Mask &m) const;
  uint32_t register_sub(Sub sub); // returns index; UINT32_MAX if known
  Mask closure(const std::vector<uint16_t> &gens) const;
  void enumerate();
};

} // namespace gw

#endif
