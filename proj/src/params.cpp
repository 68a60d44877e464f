#include "coevolve/params.hpp"

#include <cmath>

#include "coevolve/errors.hpp"
#include "coevolve/random.hpp"

namespace coevolve {

std::string to_string(LinkVariant variant) {
  return variant == LinkVariant::SelfDriven ? "self_driven" : "followee_driven";
}

LinkVariant parse_link_variant(const std::string& text) {
  if (text == "self_driven") return LinkVariant::SelfDriven;
  if (text == "followee_driven") return LinkVariant::FolloweeDriven;
  throw ValidationError("unknown link variant '" + text +
                        "' (expected self_driven or followee_driven)");
}

namespace {

void check_rates(const std::vector<double>& values, std::size_t m, const char* name) {
  if (values.size() != m)
    throw ValidationError(std::string(name) + " has " + std::to_string(values.size()) +
                          " entries, expected " + std::to_string(m));
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!std::isfinite(values[i]) || values[i] < 0.0)
      throw ValidationError(std::string(name) + "[" + std::to_string(i) +
                            "] must be finite and non-negative");
}

}  // namespace

void ModelParams::validate() const {
  const std::size_t m = nodes();
  check_rates(eta, m, "eta");
  check_rates(beta, m, "beta");
  check_rates(mu, m, "mu");
  check_rates(alpha, m, "alpha");
  if (!(omega1 > 0.0) || !std::isfinite(omega1))
    throw ValidationError("omega1 must be positive and finite");
  if (!(omega2 > 0.0) || !std::isfinite(omega2))
    throw ValidationError("omega2 must be positive and finite");
}

ModelParams ModelParams::homogeneous(std::size_t nodes, double eta, double beta, double mu,
                                     double alpha, double omega1, double omega2,
                                     LinkVariant variant) {
  ModelParams p;
  p.eta.assign(nodes, eta);
  p.beta.assign(nodes, beta);
  p.mu.assign(nodes, mu);
  p.alpha.assign(nodes, alpha);
  p.omega1 = omega1;
  p.omega2 = omega2;
  p.link_variant = variant;
  return p;
}

ModelParams draw_params(std::size_t nodes, const ParamRanges& r, std::uint64_t seed,
                        double omega1, double omega2, LinkVariant variant) {
  RandomStream rng(seed);
  auto draw = [&rng](double lo, double hi) { return lo + (hi - lo) * rng.uniform(); };
  ModelParams p;
  p.omega1 = omega1;
  p.omega2 = omega2;
  p.link_variant = variant;
  for (std::size_t u = 0; u < nodes; ++u) {
    p.eta.push_back(draw(r.eta_lo, r.eta_hi));
    p.beta.push_back(draw(r.beta_lo, r.beta_hi));
    p.mu.push_back(draw(r.mu_lo, r.mu_hi));
    p.alpha.push_back(draw(r.alpha_lo, r.alpha_hi));
  }
  p.validate();
  return p;
}

}  // namespace coevolve
