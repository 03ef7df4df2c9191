#include "gw/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gw {

Perm::Perm(unsigned degree) : images_(degree) {
  if (degree == 0)
    throw std::invalid_argument("permutation degree must be >= 1");
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<uint32_t> images) : images_(std::move(images)) {
  if (images_.empty())
    throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("image table is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(unsigned degree,
                       const std::vector<std::vector<uint32_t>> &cycles) {
  Perm p(degree);
  for (const auto &cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      uint32_t from = cyc[i];
      uint32_t to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree)
        throw std::invalid_argument("cycle point exceeds degree");
      if (p.images_[from] != from)
        throw std::invalid_argument("point repeated across cycles");
      p.images_[from] = to;
    }
  }
  // verify bijection (catches repeats within a cycle)
  std::vector<bool> seen(degree, false);
  for (uint32_t v : p.images_) {
    if (seen[v])
      throw std::invalid_argument("cycles do not describe a permutation");
    seen[v] = true;
  }
  return p;
}

Perm Perm::parse_cycles(const std::string &text, unsigned degree) {
  std::vector<std::vector<uint32_t>> cycles;
  uint32_t max_point = 0;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in cycle notation at offset " +
                                  std::to_string(i));
    ++i;
    any = true;
    std::vector<uint32_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point in cycle at offset " +
                                    std::to_string(i));
      uint32_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v == 0)
        throw std::invalid_argument("cycle points are 1-indexed");
      cyc.push_back(v - 1);
      max_point = std::max(max_point, v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
    }
    if (i >= text.size())
      throw std::invalid_argument("unterminated cycle");
    ++i; // ')'
    if (cyc.size() >= 2)
      cycles.push_back(std::move(cyc));
    skip_ws();
  }
  if (!any)
    throw std::invalid_argument("empty cycle string");
  unsigned d = degree ? degree : max_point + 1;
  if (degree && max_point >= degree)
    throw std::invalid_argument("cycle point exceeds requested degree");
  return from_cycles(d, cycles);
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

bool Perm::is_even() const {
  // parity = (degree - #cycles) mod 2, counting fixed points as cycles
  std::vector<bool> seen(images_.size(), false);
  unsigned transpositions = 0;
  for (uint32_t s = 0; s < images_.size(); ++s) {
    if (seen[s])
      continue;
    unsigned len = 0;
    for (uint32_t x = s; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Perm Perm::inverse() const {
  std::vector<uint32_t> inv(images_.size());
  for (uint32_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

Perm Perm::operator*(const Perm &rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<uint32_t> out(images_.size());
  for (uint32_t i = 0; i < images_.size(); ++i)
    out[i] = images_[rhs.images_[i]];
  Perm p;
  p.images_ = std::move(out);
  return p;
}

Perm Perm::extended(unsigned degree) const {
  if (degree < images_.size())
    throw std::invalid_argument("cannot shrink permutation");
  std::vector<uint32_t> out(degree);
  std::iota(out.begin(), out.end(), 0u);
  std::copy(images_.begin(), images_.end(), out.begin());
  Perm p;
  p.images_ = std::move(out);
  return p;
}

Perm Perm::shifted(unsigned offset, unsigned degree) const {
  if (offset + images_.size() > degree)
    throw std::invalid_argument("shift exceeds degree");
  std::vector<uint32_t> out(degree);
  std::iota(out.begin(), out.end(), 0u);
  for (uint32_t i = 0; i < images_.size(); ++i)
    out[offset + i] = offset + images_[i];
  Perm p;
  p.images_ = std::move(out);
  return p;
}

std::vector<std::vector<uint32_t>> Perm::cycles() const {
  std::vector<std::vector<uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == s) {
      seen[s] = true;
      continue;
    }
    std::vector<uint32_t> cyc;
    for (uint32_t x = s; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<uint32_t> Perm::cycle_type() const {
  std::vector<uint32_t> lens;
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t s = 0; s < images_.size(); ++s) {
    if (seen[s])
      continue;
    uint32_t len = 0;
    for (uint32_t x = s; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

mpz_class Perm::element_order() const {
  mpz_class ord = 1;
  for (uint32_t len : cycle_type())
    mpz_lcm_ui(ord.get_mpz_t(), ord.get_mpz_t(), len);
  return ord;
}

std::string Perm::str() const {
  auto cycs = cycles();
  if (cycs.empty())
    return "()";
  std::ostringstream os;
  for (const auto &cyc : cycs) {
    os << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i)
        os << ' ';
      os << cyc[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

size_t Perm::hash() const {
  size_t h = 0x9e3779b97f4a7c15ull ^ images_.size();
  for (uint32_t v : images_) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::ostream &operator<<(std::ostream &os, const Perm &p) {
  return os << p.str();
}

} // namespace gw
