#include "gw/action.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace gw {

namespace {

Perm pair_perm(const Perm &image, const Perm &source, unsigned m, unsigned d) {
  std::vector<uint32_t> im(m + d);
  for (uint32_t i = 0; i < m; ++i)
    im[i] = image[i];
  for (uint32_t i = 0; i < d; ++i)
    im[m + i] = m + source[i];
  return Perm(std::move(im));
}

} // namespace

ActionImage::ActionImage(const PermGroup &source, unsigned m,
                         const std::vector<Perm> &image_gens)
    : m_(m), source_degree_(source.degree()) {
  if (image_gens.size() != source.generators().size())
    throw std::invalid_argument("one image permutation per generator required");

  std::vector<Perm> pair_gens;
  for (size_t i = 0; i < image_gens.size(); ++i) {
    if (image_gens[i].degree() != m)
      throw std::invalid_argument("image generator degree mismatch");
    pair_gens.push_back(
        pair_perm(image_gens[i], source.generators()[i], m_, source_degree_));
  }

  std::vector<uint32_t> base(m_);
  std::iota(base.begin(), base.end(), 0u);
  pair_chain_ = StabChain(m_ + source_degree_, pair_gens, base);
  image_levels_ = 0;
  while (image_levels_ < pair_chain_.num_levels() &&
         pair_chain_.base_point(image_levels_) < m_)
    ++image_levels_;

  image_ = PermGroup(m_, image_gens);

  // Strong generators below the image levels fix every image point, so
  // their source parts generate the kernel.
  std::vector<Perm> kernel_gens;
  for (const Perm &p : pair_chain_.level_generators(image_levels_))
    kernel_gens.push_back(source_part(p));
  kernel_ = PermGroup(source_degree_, std::move(kernel_gens));
}

Perm ActionImage::image_part(const Perm &pair) const {
  std::vector<uint32_t> im(m_);
  for (uint32_t i = 0; i < m_; ++i)
    im[i] = pair[i];
  return Perm(std::move(im));
}

Perm ActionImage::source_part(const Perm &pair) const {
  std::vector<uint32_t> im(source_degree_);
  for (uint32_t i = 0; i < source_degree_; ++i)
    im[i] = pair[m_ + i] - m_;
  return Perm(std::move(im));
}

Perm ActionImage::lift(const Perm &s) const {
  if (s.degree() != m_)
    throw std::invalid_argument("degree mismatch in lift");
  // Factor s through the image-level transversals; the same factorization
  // over the paired permutations produces a source-side preimage.
  Perm r = s;
  Perm acc(m_ + source_degree_);
  for (size_t lvl = 0; lvl < image_levels_; ++lvl) {
    uint32_t beta = pair_chain_.base_point(lvl);
    uint32_t delta = r[beta];
    if (delta == beta)
      continue;
    if (!pair_chain_.in_orbit(lvl, delta))
      throw std::invalid_argument("element is not in the action image");
    Perm u = pair_chain_.transversal(lvl, delta);
    acc = acc * u;
    r = image_part(u).inverse() * r;
  }
  if (!r.is_identity())
    throw std::invalid_argument("element is not in the action image");
  return source_part(acc);
}

PermGroup pointwise_stabilizer(const PermGroup &g,
                               const std::vector<uint32_t> &points) {
  StabChain chain(g.degree(), g.generators(), points);
  // The prescribed points occupy the leading levels, so the strong
  // generators attached past them generate exactly the pointwise stabilizer.
  return PermGroup(g.degree(), chain.level_generators(points.size()));
}

std::vector<Perm> orbit_action_gens(const PermGroup &g,
                                    const std::vector<uint32_t> &orbit) {
  std::vector<uint32_t> pos(g.degree(), UINT32_MAX);
  for (uint32_t i = 0; i < orbit.size(); ++i)
    pos[orbit[i]] = i;
  std::vector<Perm> out;
  for (const Perm &s : g.generators()) {
    std::vector<uint32_t> im(orbit.size());
    for (uint32_t i = 0; i < orbit.size(); ++i) {
      uint32_t target = pos[s[orbit[i]]];
      if (target == UINT32_MAX)
        throw std::invalid_argument("set is not an orbit of the group");
      im[i] = target;
    }
    out.push_back(Perm(std::move(im)));
  }
  return out;
}

std::vector<Perm> block_action_gens(const PermGroup &g,
                                    const BlockSystem &sys) {
  std::vector<uint32_t> rep(sys.block_count, UINT32_MAX);
  for (uint32_t p = 0; p < sys.block_of.size(); ++p)
    if (rep[sys.block_of[p]] == UINT32_MAX)
      rep[sys.block_of[p]] = p;
  std::vector<Perm> out;
  for (const Perm &s : g.generators()) {
    std::vector<uint32_t> im(sys.block_count);
    for (uint32_t b = 0; b < sys.block_count; ++b)
      im[b] = sys.block_of[s[rep[b]]];
    out.push_back(Perm(std::move(im)));
  }
  return out;
}

namespace {

// Lexicographically smallest element of the coset g*N, found greedily down
// N's stabilizer chain. Depends only on the coset, so it serves as a
// canonical label.
Perm canonical_coset_rep(Perm g, const StabChain &n_chain) {
  for (size_t lvl = 0; lvl < n_chain.num_levels(); ++lvl) {
    uint32_t beta = n_chain.base_point(lvl);
    const auto &orbit = n_chain.orbit(lvl);
    uint32_t best = orbit[0];
    for (uint32_t w : orbit)
      if (g[w] < g[best])
        best = w;
    if (best != beta)
      g = g * n_chain.transversal(lvl, best);
  }
  return g;
}

} // namespace

std::vector<Perm> coset_action_gens(const PermGroup &g, const PermGroup &n,
                                    size_t max_index) {
  const StabChain &nc = n.chain();
  std::unordered_map<Perm, uint32_t, PermHash> index;
  std::vector<Perm> reps;
  reps.push_back(canonical_coset_rep(Perm(g.degree()), nc));
  index[reps[0]] = 0;
  // BFS over cosets; reps acquire indices in discovery order, which is
  // deterministic for fixed generators.
  std::vector<std::vector<uint32_t>> images(g.generators().size());
  for (size_t qi = 0; qi < reps.size(); ++qi) {
    Perm cur = reps[qi];
    for (size_t gi = 0; gi < g.generators().size(); ++gi) {
      Perm moved = canonical_coset_rep(g.generators()[gi] * cur, nc);
      auto it = index.find(moved);
      uint32_t id;
      if (it == index.end()) {
        if (reps.size() >= max_index)
          throw std::runtime_error("coset action index cap exceeded");
        id = static_cast<uint32_t>(reps.size());
        index[moved] = id;
        reps.push_back(moved);
      } else {
        id = it->second;
      }
      images[gi].resize(std::max<size_t>(images[gi].size(), qi + 1));
      images[gi][qi] = id;
    }
  }
  std::vector<Perm> out;
  for (auto &im : images) {
    im.resize(reps.size());
    out.push_back(Perm(std::move(im)));
  }
  return out;
}

} // namespace gw
