#ifndef GW_PERM_GROUP_HPP
#define GW_PERM_GROUP_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <vector>

#include "gw/perm.hpp"

namespace gw {

// Base-and-strong-generating-set structure (deterministic Schreier-Sims).
// Base points are chosen as the smallest moved point unless a prescribed
// base is given, in which case those points form the leading levels in
// order. Repeated builds over the same generators produce identical bases.
class StabChain {
public:
  StabChain() = default;
  StabChain(unsigned degree, const std::vector<Perm> &gens,
            const std::vector<uint32_t> &prescribed_base = {});

  unsigned degree() const { return degree_; }
  size_t num_levels() const { return levels_.size(); }
  uint32_t base_point(size_t level) const { return levels_[level].beta; }
  size_t orbit_size(size_t level) const { return levels_[level].orbit.size(); }
  const std::vector<uint32_t> &orbit(size_t level) const {
    return levels_[level].orbit;
  }

  mpz_class order() const;
  bool contains(const Perm &g) const;

  // Residue of sifting g through levels [from, end); second = first level
  // where the base image left the orbit (num_levels() if fully sifted).
  std::pair<Perm, size_t> sift(const Perm &g, size_t from = 0) const;

  // Coset representative u with u(base_point(level)) = point.
  Perm transversal(size_t level, uint32_t point) const;
  Perm transversal_inv(size_t level, uint32_t point) const;
  bool in_orbit(size_t level, uint32_t point) const;

  // Strong generators fixing base_point(0..level-1) pointwise; level 0
  // returns generators of the whole group.
  std::vector<Perm> level_generators(size_t level) const;

  // Order of the stabilizer of the first `level` base points.
  mpz_class level_order(size_t level) const;

private:
  struct Level {
    uint32_t beta = 0;
    std::vector<uint32_t> orbit;              // BFS order, orbit[0] == beta
    std::vector<int32_t> parent;              // per point, -1 if outside
    std::vector<int32_t> edge_gen;            // strong-gen index into sgens_
    std::vector<uint32_t> gen_indices;        // strong gens attached here
    // explicit coset representatives, kept for small degrees where the
    // memory is negligible; otherwise rebuilt from the Schreier vector
    std::vector<Perm> trans, trans_inv;
    bool cached = false;
  };

  static constexpr unsigned kTransversalCacheDegree = 2048;

  unsigned degree_ = 0;
  std::vector<Perm> sgens_;
  std::vector<Perm> sgen_invs_;
  std::vector<Level> levels_;

  void add_level(uint32_t beta);
  void attach_gen(size_t level_from, size_t level_to, uint32_t gen_idx);
  void recompute_orbit(size_t level);
  uint32_t pick_new_base(const Perm &r) const;
  void build(const std::vector<Perm> &gens,
             const std::vector<uint32_t> &prescribed_base);
};

struct BlockSystem {
  std::vector<uint32_t> block_of;  // point -> block id (ids are 0..count-1)
  uint32_t block_count = 0;

  bool trivial() const {
    return block_count == 1 || block_count == block_of.size();
  }
  std::vector<std::vector<uint32_t>> blocks() const;
};

// Finitely generated permutation group of fixed degree. Immutable after
// construction; the strong generating structure is built on first use
// under a once-only initialization contract, after which all queries are
// safe for concurrent readers.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(unsigned degree, std::vector<Perm> gens);

  static PermGroup trivial(unsigned degree);

  unsigned degree() const { return data_->degree; }
  const std::vector<Perm> &generators() const { return data_->gens; }

  const StabChain &chain() const;

  mpz_class order() const { return chain().order(); }
  bool contains(const Perm &g) const;
  bool is_trivial() const;

  std::vector<std::vector<uint32_t>> orbits() const;
  bool is_transitive() const;

  // Minimal G-invariant block system whose seed points share a block.
  // Requires a transitive group and distinct seed points.
  BlockSystem minimal_blocks(uint32_t a, uint32_t b) const;

  bool is_even_subgroup() const;

  // Explicit element list via closure BFS; throws if the group has more
  // than `limit` elements.
  std::vector<Perm> elements(size_t limit) const;

  Perm random_element(std::mt19937_64 &rng) const;

  bool is_subgroup_of(const PermGroup &g) const;
  bool same_group(const PermGroup &g) const;

private:
  struct Data {
    unsigned degree = 0;
    std::vector<Perm> gens;
    mutable std::once_flag chain_once;
    mutable std::unique_ptr<StabChain> chain;
  };
  std::shared_ptr<Data> data_;
};

} // namespace gw

#endif
