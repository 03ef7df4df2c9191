#include "gw/report.hpp"

#include <sstream>

namespace gw {

using nlohmann::json;

json to_json(const WidthReport &r) {
  json out;
  out["width"] = r.width;
  out["confidence"] = confidence_name(r.confidence);
  out["factors"] = json::array();
  for (const SimpleFactorId &f : r.factors) {
    json jf;
    jf["label"] = f.display();
    jf["order"] = f.order.get_str();
    if (f.mu)
      jf["mu"] = *f.mu;
    else
      jf["mu"] = nullptr;
    out["factors"].push_back(jf);
  }
  if (r.chain) {
    json jc = json::array();
    for (const PermGroup &link : r.chain->links) {
      json gens = json::array();
      for (const Perm &g : link.generators())
        gens.push_back(g.str());
      jc.push_back(gens);
    }
    out["chain"] = jc;
  }
  return out;
}

std::string claim_name(GaloisCertificate::Claim claim, unsigned n) {
  switch (claim) {
  case GaloisCertificate::Claim::symmetric:
    return "symmetric(" + std::to_string(n) + ")";
  case GaloisCertificate::Claim::alternating:
    return "alternating(" + std::to_string(n) + ")";
  case GaloisCertificate::Claim::undetermined:
    return "undetermined";
  }
  return "?";
}

json to_json(const GaloisCertificate &c) {
  json out;
  out["claim"] = claim_name(c.claim, c.n);
  out["degree"] = c.n;
  out["discriminant_square"] = c.discriminant_square;
  out["primes_scanned"] = c.primes_scanned;
  out["evidence"] = json::array();
  for (const CycleTypeEvidence &ev : c.evidence) {
    json je;
    je["prime"] = ev.prime;
    je["cycle_type"] = ev.factor_degrees;
    je["occurrences"] = ev.occurrences;
    out["evidence"].push_back(je);
  }
  if (c.irreducible_mod_p_witness)
    out["irreducible_mod_p_witness"] = *c.irreducible_mod_p_witness;
  if (c.prime_cycle_witness) {
    out["prime_cycle_witness"] = *c.prime_cycle_witness;
    out["prime_cycle_length"] = c.prime_cycle_length;
  }
  if (c.transposition_witness)
    out["transposition_witness"] = *c.transposition_witness;
  return out;
}

json to_json(const MonodromyResult &m) {
  json out;
  out["base_point"] = {m.base_point.real(), m.base_point.imag()};
  out["branch_points"] = json::array();
  for (cplx w : m.branch_points)
    out["branch_points"].push_back({w.real(), w.imag()});
  out["permutations"] = json::array();
  for (const Perm &s : m.loop_permutations)
    out["permutations"].push_back(s.str());
  out["group_order"] = m.group.order().get_str();
  out["transitive"] = m.transitive();
  return out;
}

std::string render_text(const WidthReport &r) {
  std::ostringstream os;
  os << "width: " << r.width << "  (" << confidence_name(r.confidence) << ")\n";
  if (!r.factors.empty()) {
    os << "composition factors:";
    for (const SimpleFactorId &f : r.factors) {
      os << " " << f.display();
      if (f.mu)
        os << "[mu=" << *f.mu << "]";
    }
    os << "\n";
  }
  if (r.chain) {
    os << "witness chain (orders):";
    for (const PermGroup &link : r.chain->links)
      os << " " << link.order().get_str();
    os << "\n  indices:";
    for (const mpz_class &i : r.chain->indices)
      os << " " << i.get_str();
    os << "\n";
  }
  return os.str();
}

std::string render_text(const GaloisCertificate &c) {
  std::ostringstream os;
  os << "galois claim: " << claim_name(c.claim, c.n) << "\n";
  os << "discriminant square: " << (c.discriminant_square ? "yes" : "no")
     << "\n";
  os << "primes scanned: " << c.primes_scanned << "\n";
  os << "evidence (cycle types):\n";
  for (const CycleTypeEvidence &ev : c.evidence) {
    os << "  p=" << ev.prime << "  type {";
    for (size_t i = 0; i < ev.factor_degrees.size(); ++i)
      os << (i ? "," : "") << ev.factor_degrees[i];
    os << "}  seen " << ev.occurrences << "x\n";
  }
  if (c.prime_cycle_witness)
    os << "prime-cycle witness: q=" << c.prime_cycle_length << " at p="
       << *c.prime_cycle_witness << "\n";
  if (c.transposition_witness)
    os << "transposition witness: p=" << *c.transposition_witness << "\n";
  return os.str();
}

std::string render_text(const MonodromyResult &m) {
  std::ostringstream os;
  os << "base point: " << m.base_point.real() << (m.base_point.imag() < 0 ? " - " : " + ")
     << std::abs(m.base_point.imag()) << "i\n";
  os << "branch points (" << m.branch_points.size() << "):\n";
  for (cplx w : m.branch_points)
    os << "  " << w.real() << (w.imag() < 0 ? " - " : " + ")
       << std::abs(w.imag()) << "i\n";
  os << "loop permutations:\n";
  for (const Perm &s : m.loop_permutations)
    os << "  " << s.str() << "\n";
  os << "group order: " << m.group.order().get_str()
     << (m.transitive() ? "  (transitive)" : "  (intransitive)") << "\n";
  return os.str();
}

} // namespace gw
