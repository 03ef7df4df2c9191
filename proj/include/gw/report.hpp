#ifndef GW_REPORT_HPP
#define GW_REPORT_HPP

#include <string>

#include "json.hpp"

#include "gw/galois.hpp"
#include "gw/monodromy.hpp"
#include "gw/width.hpp"

namespace gw {

// JSON schema: {"width": int, "confidence": string,
//               "factors": [{"label","order","mu"}],
//               "chain": optional [[generators per link]]}
// plus per-command sections ("evidence", "branch_points", "permutations").
nlohmann::json to_json(const WidthReport &r);
nlohmann::json to_json(const GaloisCertificate &c);
nlohmann::json to_json(const MonodromyResult &m);

std::string render_text(const WidthReport &r);
std::string render_text(const GaloisCertificate &c);
std::string render_text(const MonodromyResult &m);

std::string claim_name(GaloisCertificate::Claim claim, unsigned n);

} // namespace gw

#endif
