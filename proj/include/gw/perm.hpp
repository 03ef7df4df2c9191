#ifndef GW_PERM_HPP
#define GW_PERM_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gw {

// A permutation of {0, ..., d-1}, stored as the image table.
// Composition follows the usual function convention: (a * b)(i) = a(b(i)),
// i.e. b acts first.
class Perm {
public:
  Perm() = default;
  explicit Perm(unsigned degree);                 // identity
  explicit Perm(std::vector<uint32_t> images);    // validated bijection

  static Perm from_cycles(unsigned degree,
                          const std::vector<std::vector<uint32_t>> &cycles);

  // Cycle-notation text, 1-indexed, e.g. "(1 2 3)(4 5)"; identity is "()".
  // If degree == 0 the degree is inferred from the largest point mentioned.
  static Perm parse_cycles(const std::string &text, unsigned degree = 0);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  uint32_t operator[](uint32_t i) const { return images_[i]; }
  const std::vector<uint32_t> &images() const { return images_; }

  bool is_identity() const;
  bool is_even() const;
  Perm inverse() const;
  Perm operator*(const Perm &rhs) const;          // apply rhs first
  bool operator==(const Perm &rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Perm &rhs) const { return images_ != rhs.images_; }
  bool operator<(const Perm &rhs) const { return images_ < rhs.images_; }

  // Extend to a larger degree (new points fixed) or shift all points.
  Perm extended(unsigned degree) const;
  Perm shifted(unsigned offset, unsigned degree) const;

  std::vector<std::vector<uint32_t>> cycles() const;  // nontrivial cycles
  std::vector<uint32_t> cycle_type() const;           // all lengths, descending
  mpz_class element_order() const;

  std::string str() const;                        // 1-indexed cycle notation
  size_t hash() const;

private:
  std::vector<uint32_t> images_;
};

std::ostream &operator<<(std::ostream &os, const Perm &p);

struct PermHash {
  size_t operator()(const Perm &p) const { return p.hash(); }
};

} // namespace gw

#endif
