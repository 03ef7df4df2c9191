#ifndef GW_ACTION_HPP
#define GW_ACTION_HPP

#include <vector>

#include "gw/perm_group.hpp"

namespace gw {

// A homomorphism G -> Sym(m) described by the images of G's generators,
// realized through the "pair group" on m + degree(G) points whose stabilizer
// chain is based on the image points first. This yields the image group,
// kernel generators on the original points, and lifting of arbitrary image
// elements back to G.
class ActionImage {
public:
  // image_gens[i] is the induced permutation (degree m) of generators()[i].
  ActionImage(const PermGroup &source, unsigned m,
              const std::vector<Perm> &image_gens);

  const PermGroup &image() const { return image_; }
  const PermGroup &kernel() const { return kernel_; }

  // Any g in the source with induced image s; s must lie in image().
  Perm lift(const Perm &s) const;

private:
  unsigned m_;
  unsigned source_degree_;
  StabChain pair_chain_;
  size_t image_levels_ = 0; // pair-chain levels with base < m
  PermGroup image_;
  PermGroup kernel_;

  Perm image_part(const Perm &pair) const;
  Perm source_part(const Perm &pair) const;
};

// Pointwise stabilizer of a point set, via a chain based on those points.
PermGroup pointwise_stabilizer(const PermGroup &g,
                               const std::vector<uint32_t> &points);

// Action of g on one of its orbits (points relabeled 0..|orbit|-1,
// ascending).
std::vector<Perm> orbit_action_gens(const PermGroup &g,
                                    const std::vector<uint32_t> &orbit);

// Action on the blocks of a block system.
std::vector<Perm> block_action_gens(const PermGroup &g,
                                    const BlockSystem &sys);

// Action on left cosets gN by left multiplication; throws if the index
// exceeds max_index. Cosets are labeled by canonical representatives so the
// enumeration is deterministic.
std::vector<Perm> coset_action_gens(const PermGroup &g, const PermGroup &n,
                                    size_t max_index);

} // namespace gw

#endif
