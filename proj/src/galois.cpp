#include "gw/galois.hpp"

#include <algorithm>
#include <map>

#include "gw/fppoly.hpp"
#include "gw/zfactor.hpp"

namespace gw {

namespace {

bool is_prime_u64(uint64_t n) {
  if (n < 2)
    return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

bool is_prime_u32(unsigned n) { return is_prime_u64(n); }

// One even part equal to 2 and all other parts odd: an odd power of the
// Frobenius element is a transposition.
bool certifies_transposition(const std::vector<unsigned> &type) {
  unsigned evens = 0;
  for (unsigned d : type) {
    if (d % 2 == 0) {
      ++evens;
      if (d != 2)
        return false;
    }
  }
  return evens == 1;
}

// Largest prime part q with q > n/2; the other parts are then all smaller
// than q, so a suitable power of the Frobenius element is a q-cycle.
unsigned long_prime_part(const std::vector<unsigned> &type, unsigned n) {
  for (unsigned d : type)
    if (2 * d > n && is_prime_u32(d))
      return d;
  return 0;
}

} // namespace

GaloisCertificate certify_group(const ZPoly &f_in, const GaloisOptions &opts) {
  ZPoly f = f_in.primitive_part();
  if (f.degree() < 1)
    throw std::invalid_argument("certify_group requires degree >= 1");

  GaloisCertificate cert;
  cert.n = static_cast<unsigned>(f.degree());

  // squarefree precondition
  if (f.degree() >= 2) {
    ZPoly g = gcd(f, f.derivative());
    if (g.degree() > 0)
      throw std::invalid_argument("polynomial is not squarefree over Q");
  }

  // reducible inputs are reported with their factors
  ZFactorization fac = factor_over_z(f);
  if (fac.factors.size() != 1 ||
      fac.factors[0].degree() != f.degree())
    throw ReduciblePolynomial(fac.factors);

  if (f.degree() == 1) {
    cert.claim = GaloisCertificate::Claim::symmetric; // S_1, trivially
    return cert;
  }

  cert.disc = discriminant(f);
  cert.discriminant_square = is_perfect_square(cert.disc);

  const unsigned n = cert.n;
  const bool prime_degree = is_prime_u32(n);

  std::map<std::vector<unsigned>, size_t> index_of_type;

  auto decide = [&]() -> bool {
    bool primitive = prime_degree || cert.prime_cycle_witness.has_value();
    if (n <= 2) {
      cert.claim = GaloisCertificate::Claim::symmetric;
      return true;
    }
    if (!cert.discriminant_square && primitive &&
        cert.transposition_witness.has_value()) {
      cert.claim = GaloisCertificate::Claim::symmetric;
      return true;
    }
    if (cert.discriminant_square) {
      if (n == 3) {
        // irreducible cubic with square discriminant
        cert.claim = GaloisCertificate::Claim::alternating;
        return true;
      }
      if (cert.prime_cycle_witness && cert.prime_cycle_length + 3 <= n) {
        cert.claim = GaloisCertificate::Claim::alternating;
        return true;
      }
    }
    return false;
  };

  if (n <= 2) {
    // transitive subgroups of S_2 and S_1 are full; still record a little
    // evidence for the report
    cert.claim = GaloisCertificate::Claim::symmetric;
  }

  uint64_t p = 1;
  while (cert.primes_scanned < opts.prime_budget) {
    // next prime of good reduction
    do {
      ++p;
    } while (!is_prime_u64(p) ||
             mpz_divisible_ui_p(f.lc().get_mpz_t(), p) ||
             mpz_divisible_ui_p(cert.disc.get_mpz_t(), p));
    ++cert.primes_scanned;

    std::vector<unsigned> type = fp_factor_degrees(fp_from_zpoly(f, p));
    auto it = index_of_type.find(type);
    if (it == index_of_type.end()) {
      index_of_type.emplace(type, cert.evidence.size());
      cert.evidence.push_back({p, type, 1});
    } else {
      ++cert.evidence[it->second].occurrences;
    }

    if (type.size() == 1 && !cert.irreducible_mod_p_witness)
      cert.irreducible_mod_p_witness = p;
    if (!cert.prime_cycle_witness) {
      unsigned q = long_prime_part(type, n);
      if (q && q < n) { // a full n-cycle alone does not force primitivity
        cert.prime_cycle_witness = p;
        cert.prime_cycle_length = q;
      }
    }
    if (!cert.transposition_witness && certifies_transposition(type))
      cert.transposition_witness = p;

    if (decide())
      return cert;
    if (n <= 2 && cert.primes_scanned >= 3)
      return cert; // claim already set, evidence collected
  }
  decide();
  return cert;
}

std::vector<SimpleFactorId> alternating_group_factors(unsigned n) {
  std::vector<SimpleFactorId> out;
  if (n >= 5) {
    out.push_back(SimpleFactorId::alternating(n));
  } else if (n == 4) {
    out.push_back(SimpleFactorId::cyclic(3));
    out.push_back(SimpleFactorId::cyclic(2));
    out.push_back(SimpleFactorId::cyclic(2));
  } else if (n == 3) {
    out.push_back(SimpleFactorId::cyclic(3));
  }
  return out;
}

std::vector<SimpleFactorId> symmetric_group_factors(unsigned n) {
  std::vector<SimpleFactorId> out;
  if (n >= 2)
    out.push_back(SimpleFactorId::cyclic(2));
  auto alt = alternating_group_factors(n);
  out.insert(out.end(), alt.begin(), alt.end());
  return out;
}

WidthReport width_from_certificate(const GaloisCertificate &cert) {
  switch (cert.claim) {
  case GaloisCertificate::Claim::symmetric:
    return width_by_factors(symmetric_group_factors(cert.n));
  case GaloisCertificate::Claim::alternating:
    return width_by_factors(alternating_group_factors(cert.n));
  case GaloisCertificate::Claim::undetermined:
    break;
  }
  // The Frobenius element at p generates a cyclic subgroup of order
  // lcm(cycle type); any prime dividing a part therefore bounds the width
  // from below through monotonicity. Never invent a group beyond that.
  WidthReport out;
  out.width = 1;
  out.confidence = Confidence::heuristic_lower_bound;
  for (const CycleTypeEvidence &ev : cert.evidence)
    for (unsigned d : ev.factor_degrees)
      for (unsigned q = 2; q <= d; ++q)
        if (d % q == 0 && is_prime_u32(q))
          out.width = std::max(out.width, q);
  return out;
}

WidthReport width_of_polynomial(const ZPoly &f, const GaloisOptions &opts) {
  return width_from_certificate(certify_group(f, opts));
}

} // namespace gw
