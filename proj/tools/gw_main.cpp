// gw: Galois width of permutation groups, integer polynomials, and
// one-parameter families.
//
//   gw width-group "wr(S(2),S(10)) & alt"
//   gw width-poly  "x^3 - 2" --json
//   gw monodromy   "y^3 + p*y + p"
//   gw oracle      "A(4)"
//
// Exit codes: 0 proved, 2 heuristic or bound only, 1 error.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gw/group_expr.hpp"
#include "gw/report.hpp"
#include "gw/zfactor.hpp"

namespace {

struct RunConfig {
  size_t oracle_bound = 2000;
  unsigned long mu_bound = 2000;
  size_t coset_cap = 100000;
  unsigned long prime_budget = 10000;
  double tol = 1e-8;
  bool json = false;
  bool cross_check = false;
};

int exit_code_for(gw::Confidence c) {
  return c == gw::Confidence::proved ? 0 : 2;
}

void emit(const nlohmann::json &j, const std::string &text, bool as_json) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_group(const std::string &expr_text, const RunConfig &cfg,
              bool oracle_only) {
  gw::GroupExprPtr expr = gw::parse_group_expr(expr_text);
  gw::PermGroup g = gw::evaluate(*expr);

  gw::WidthOptions wopts;
  wopts.structure.coset_cap = cfg.coset_cap;
  wopts.structure.mu_bound = cfg.mu_bound;

  gw::WidthReport report;
  if (oracle_only) {
    report = gw::width_oracle(g, cfg.oracle_bound);
  } else {
    report = gw::width(g, wopts);
    if (cfg.cross_check && g.order() <= static_cast<unsigned long>(cfg.oracle_bound)) {
      gw::WidthReport oracle = gw::width_oracle(g, cfg.oracle_bound);
      if (oracle.width != report.width) {
        std::cerr << "internal error: oracle disagrees with the factor "
                     "formula ("
                  << oracle.width << " vs " << report.width << ")\n";
        return 1;
      }
      report.chain = oracle.chain;
    }
  }

  nlohmann::json j = gw::to_json(report);
  j["expression"] = expr->str();
  j["degree"] = g.degree();
  j["order"] = g.order().get_str();
  std::ostringstream text;
  text << "group: " << expr->str() << "  degree " << g.degree() << "  order "
       << g.order().get_str() << "\n"
       << gw::render_text(report);
  emit(j, text.str(), cfg.json);
  return exit_code_for(report.confidence);
}

int cmd_poly(const std::string &poly_text, const RunConfig &cfg) {
  gw::ZPoly f;
  std::string trimmed = poly_text;
  if (!trimmed.empty() && trimmed.front() == '[') {
    // JSON array of ascending coefficients
    nlohmann::json arr = nlohmann::json::parse(trimmed);
    std::vector<mpz_class> coeffs;
    for (const auto &item : arr) {
      if (item.is_number_integer())
        coeffs.emplace_back(static_cast<long>(item.get<long long>()));
      else
        coeffs.emplace_back(item.get<std::string>());
    }
    f = gw::ZPoly(std::move(coeffs));
  } else {
    f = gw::parse_zpoly(poly_text, "x");
  }

  gw::GaloisOptions gopts;
  gopts.prime_budget = cfg.prime_budget;
  try {
    gw::GaloisCertificate cert = gw::certify_group(f, gopts);
    gw::WidthReport report = gw::width_from_certificate(cert);
    nlohmann::json j = gw::to_json(report);
    j.update(gw::to_json(cert));
    j["polynomial"] = f.str();
    std::ostringstream text;
    text << "polynomial: " << f.str() << "\n"
         << gw::render_text(cert) << gw::render_text(report);
    emit(j, text.str(), cfg.json);
    return exit_code_for(report.confidence);
  } catch (const gw::ReduciblePolynomial &e) {
    nlohmann::json j;
    j["error"] = "reducible";
    j["factors"] = nlohmann::json::array();
    std::ostringstream text;
    text << "error: polynomial is reducible over Q\nfactors:\n";
    for (const gw::ZPoly &q : e.factors()) {
      j["factors"].push_back(q.str());
      text << "  " << q.str() << "\n";
    }
    emit(j, text.str(), cfg.json);
    return 1;
  }
}

int cmd_monodromy(const std::string &family_text, const RunConfig &cfg) {
  gw::ParametricFamily fam = gw::ParametricFamily::parse(family_text);
  gw::TrackOptions topts;
  topts.residual_tol = cfg.tol;
  gw::MonodromyResult mono = gw::monodromy_group(fam, topts);
  gw::WidthReport report = gw::width(mono.group);
  report.confidence = gw::Confidence::heuristic_lower_bound;

  nlohmann::json j = gw::to_json(report);
  j.update(gw::to_json(mono));
  j["family"] = fam.f.str();
  std::ostringstream text;
  text << "family: " << fam.f.str() << "\n"
       << gw::render_text(mono) << gw::render_text(report);
  emit(j, text.str(), cfg.json);
  return exit_code_for(report.confidence);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Galois width of groups, polynomials, and families"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_flag("--json", cfg.json, "emit JSON instead of text")
      ->envname("GW_JSON");
  app.add_option("--oracle-bound", cfg.oracle_bound,
                 "group-order bound for the brute-force oracle")
      ->envname("GW_ORACLE_BOUND");
  app.add_option("--mu-bound", cfg.mu_bound,
                 "group-order bound for exhaustive mu searches")
      ->envname("GW_MU_BOUND");
  app.add_option("--prime-budget", cfg.prime_budget,
                 "number of good primes scanned for certification")
      ->envname("GW_PRIME_BUDGET");
  app.add_option("--coset-cap", cfg.coset_cap,
                 "largest index allowed for coset actions")
      ->envname("GW_COSET_CAP");
  app.add_option("--tol", cfg.tol, "path-tracking residual tolerance")
      ->envname("GW_TOL");
  app.add_flag("--cross-check", cfg.cross_check,
               "compare against the oracle whenever the order permits")
      ->envname("GW_CROSS_CHECK");

  std::string arg;
  CLI::App *sub_group =
      app.add_subcommand("width-group", "width of a group expression");
  sub_group->add_option("expr", arg, "group expression")->required();
  CLI::App *sub_poly =
      app.add_subcommand("width-poly", "certified width of an integer polynomial");
  sub_poly->add_option("poly", arg, "polynomial in x or JSON coefficients")
      ->required();
  CLI::App *sub_mono =
      app.add_subcommand("monodromy", "numerical monodromy of f(y; p)");
  sub_mono->add_option("family", arg, "family in y and p")->required();
  CLI::App *sub_oracle =
      app.add_subcommand("oracle", "brute-force minimax chain width");
  sub_oracle->add_option("expr", arg, "group expression")->required();
  for (CLI::App *sub : {sub_group, sub_poly, sub_mono, sub_oracle})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sub_group->parsed())
      return cmd_group(arg, cfg, false);
    if (sub_oracle->parsed())
      return cmd_group(arg, cfg, true);
    if (sub_poly->parsed())
      return cmd_poly(arg, cfg);
    if (sub_mono->parsed())
      return cmd_monodromy(arg, cfg);
  } catch (const gw::ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
