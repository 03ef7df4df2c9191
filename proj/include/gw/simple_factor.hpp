#ifndef GW_SIMPLE_FACTOR_HPP
#define GW_SIMPLE_FACTOR_HPP

#include <optional>
#include <string>

#include <gmpxx.h>

namespace gw {

class PermGroup;

// Identified isomorphism type of a composition factor together with its
// minimal faithful permutation degree, when certified.
struct SimpleFactorId {
  enum class Label {
    cyclic,        // C_p, p prime
    alternating,   // A_n, n >= 5
    classical,     // e.g. PSL(2,7)
    sporadic,      // e.g. M11
    unidentified,
  };
  enum class MuProvenance { analytic, exhaustive_search, table, unknown };

  Label label = Label::unidentified;
  unsigned parameter = 0;            // p for cyclic, n for alternating
  std::string name;                  // classical / sporadic display name
  mpz_class order = 0;
  std::optional<unsigned> mu;
  MuProvenance mu_provenance = MuProvenance::unknown;
  std::optional<unsigned> degree_bound;  // faithful degree of the realization

  std::string display() const;

  static SimpleFactorId cyclic(unsigned p);
  static SimpleFactorId alternating(unsigned n);

  bool operator==(const SimpleFactorId &o) const {
    return label == o.label && parameter == o.parameter && name == o.name &&
           order == o.order;
  }
};

// Identification of a simple group by its order, using the analytic
// families (cyclic of prime order, alternating) plus the table of
// nonabelian simple orders below `table_bound`. The order-20160 ambiguity
// is resolved by testing for an element of order 15 (present in A8,
// absent in PSL(3,4)). mu values are attached only when the analytic
// families apply or when an exhaustive subgroup search certifies them
// (|G| <= mu_bound). Throws if the order matches no simple group and is
// not prime.
SimpleFactorId identify_simple(const PermGroup &g,
                               unsigned long table_bound = 1000000,
                               unsigned long mu_bound = 2000);

} // namespace gw

#endif
