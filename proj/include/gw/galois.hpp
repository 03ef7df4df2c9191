#ifndef GW_GALOIS_HPP
#define GW_GALOIS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "gw/width.hpp"
#include "gw/zpoly.hpp"

namespace gw {

// Frobenius cycle type at a prime of good reduction: the multiset of
// degrees of the irreducible factors of f mod p.
struct CycleTypeEvidence {
  unsigned long prime = 0;               // first witness prime
  std::vector<unsigned> factor_degrees;  // ascending, sums to deg f
  unsigned occurrences = 1;              // how many scanned primes gave it
};

// Exact certification of the Galois group of a squarefree integer
// polynomial from reduction data. Only full symmetric / alternating claims
// are ever certified:
// - irreducibility over Q makes the group transitive;
// - a prime cycle length q > n/2 forces primitivity (as does prime degree);
// - a transposition power (one even part equal to 2, all other parts odd)
//   inside a primitive group forces S_n;
// - a square discriminant places the group inside A_n, and a q-cycle with
//   q <= n-3 then forces A_n.
struct GaloisCertificate {
  enum class Claim { symmetric, alternating, undetermined };

  Claim claim = Claim::undetermined;
  unsigned n = 0; // degree
  std::vector<CycleTypeEvidence> evidence;
  bool discriminant_square = false;
  mpz_class disc;
  std::optional<unsigned long> irreducible_mod_p_witness;
  std::optional<unsigned long> prime_cycle_witness;   // the prime p
  unsigned prime_cycle_length = 0;                    // the q it certified
  std::optional<unsigned long> transposition_witness;
  unsigned long primes_scanned = 0;
};

class ReduciblePolynomial : public std::runtime_error {
public:
  ReduciblePolynomial(std::vector<ZPoly> factors)
      : std::runtime_error("polynomial is reducible over Q"),
        factors_(std::move(factors)) {}
  const std::vector<ZPoly> &factors() const { return factors_; }

private:
  std::vector<ZPoly> factors_;
};

struct GaloisOptions {
  unsigned long prime_budget = 10000; // number of good primes scanned
};

// Scans primes of good reduction in ascending order, collecting cycle
// types, and stops as soon as a claim is certified. Throws
// ReduciblePolynomial (with the factors) on reducible input and
// std::invalid_argument on non-squarefree input.
GaloisCertificate certify_group(const ZPoly &f, const GaloisOptions &opts = {});

// Width of the certified group. Symmetric/alternating certificates map
// through the composition-factor formula with proved confidence; an
// undetermined certificate yields a heuristic lower bound (the largest
// prime dividing an observed factor degree, via the cyclic subgroup each
// Frobenius element generates).
WidthReport width_from_certificate(const GaloisCertificate &cert);

WidthReport width_of_polynomial(const ZPoly &f, const GaloisOptions &opts = {});

// Composition factors of S_n / A_n by the construction rules.
std::vector<SimpleFactorId> symmetric_group_factors(unsigned n);
std::vector<SimpleFactorId> alternating_group_factors(unsigned n);

} // namespace gw

#endif
