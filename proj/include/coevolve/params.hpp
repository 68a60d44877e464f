#ifndef COEVOLVE_PARAMS_HPP
#define COEVOLVE_PARAMS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace coevolve {

// Which retweets drive the link-creation intensity of a pair (u, s).
enum class LinkVariant {
  // Retweets of s by the followees of u.
  FolloweeDriven,
  // Retweets of s by u itself.
  SelfDriven,
};

std::string to_string(LinkVariant variant);
LinkVariant parse_link_variant(const std::string& text);

struct ModelParams {
  std::vector<double> eta;    // spontaneous tweet rate per node
  std::vector<double> beta;   // influence weight per source
  std::vector<double> mu;     // spontaneous follow rate per node
  std::vector<double> alpha;  // retweet-driven follow weight per node
  double omega1 = 1.0;        // diffusion kernel decay
  double omega2 = 1.0;        // link kernel decay
  LinkVariant link_variant = LinkVariant::SelfDriven;

  std::size_t nodes() const { return eta.size(); }

  // Throws ValidationError on size mismatch, negative or non-finite values.
  void validate() const;

  static ModelParams homogeneous(std::size_t nodes, double eta, double beta, double mu,
                                 double alpha, double omega1 = 1.0, double omega2 = 1.0,
                                 LinkVariant variant = LinkVariant::SelfDriven);
};

// Independent uniform draws per node from [lo, hi] ranges.
struct ParamRanges {
  double eta_lo = 0.0, eta_hi = 1.5;
  double beta_lo = 0.0, beta_hi = 0.1;
  double mu_lo = 0.0, mu_hi = 0.0004;
  double alpha_lo = 0.0, alpha_hi = 0.1;
};

ModelParams draw_params(std::size_t nodes, const ParamRanges& ranges, std::uint64_t seed,
                        double omega1 = 1.0, double omega2 = 1.0,
                        LinkVariant variant = LinkVariant::SelfDriven);

}  // namespace coevolve

#endif  // COEVOLVE_PARAMS_HPP
