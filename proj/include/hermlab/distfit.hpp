#pragma once

// Parametric distribution fits for the rate samples: nine families, fitted
// by moment matching and by maximum likelihood, ranked by AIC. The extreme
// value family is the minimum-type Gumbel F(x) = 1 - exp(-exp((x-loc)/scale)).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hermlab {

inline constexpr double kEulerGamma = 0.5772156649015328606;

// psi and psi' with the argument shifted into the asymptotic range; x > 0
double digamma(double x);
double trigamma(double x);

// regularized lower incomplete gamma P(a, x), a > 0, x >= 0
double reg_lower_gamma(double a, double x);

enum class DistFamily {
  extreme_value,  // loc, scale       (minimum type)
  gamma,          // shape, scale
  weibull,        // shape, scale
  lognormal,      // log-mean, log-sd
  logistic,       // loc, scale
  normal,         // mean, sd
  exponential,    // rate
  rayleigh,       // scale
  uniform,        // lower, upper
};

inline constexpr std::array<DistFamily, 9> kAllFamilies = {
    DistFamily::extreme_value, DistFamily::gamma,       DistFamily::weibull,
    DistFamily::lognormal,     DistFamily::logistic,    DistFamily::normal,
    DistFamily::exponential,   DistFamily::rayleigh,    DistFamily::uniform,
};

std::string family_token(DistFamily f);
std::optional<DistFamily> family_from_token(std::string_view tok);
int family_param_count(DistFamily f);  // 1 or 2
const char* param_name(DistFamily f, int which);

struct DistParams {
  double p1 = 0, p2 = 0;  // meaning per family, see the enum; p2 unused for 1-parameter families
};

struct MeanVar {
  double mean = 0, var = 0;
};

// analytic mean and variance at the given parameters
MeanVar dist_mean_var(DistFamily f, const DistParams& p);

// Mean of a Gumbel under either sign convention. DistFamily::extreme_value
// is the minimum type, mean = loc - kEulerGamma*scale (what dist_mean_var
// reports); the mirrored maximum type has mean = loc + kEulerGamma*scale.
// Both are exposed so either convention of the loc/mean relation can be
// checked against data; the CDF itself stays the authoritative definition.
double extreme_value_mean(const DistParams& p, bool maximum_type);

// parameters whose analytic moments match (mean, var); one-parameter
// families match the mean only. nullopt when no parameters can.
std::optional<DistParams> moment_fit(DistFamily f, double mean, double var);

double log_pdf(DistFamily f, const DistParams& p, double x);
double dist_cdf(DistFamily f, const DistParams& p, double x);
double loglik(DistFamily f, const DistParams& p, const std::vector<double>& xs);

// maximum-likelihood parameters with the optimizer's convergence report;
// closed-form fits count as converged in zero iterations. nullopt when the
// family does not apply to the sample (support violation or a degenerate
// sample).
struct MleInfo {
  DistParams params;
  bool converged = true;
  int iterations = 0;
};
std::optional<MleInfo> mle_fit_info(DistFamily f, const std::vector<double>& xs);

// parameters only, same applicability rules
std::optional<DistParams> mle_fit(DistFamily f, const std::vector<double>& xs);

struct FitResult {
  DistFamily family = DistFamily::extreme_value;
  bool applicable = false;
  DistParams params;
  double loglik = 0, aic = 0;  // NaN when not applicable
  bool converged = false;
  int iterations = 0;
};

// Maximum-likelihood fit of every family, sorted by ascending AIC with
// ties broken by descending log-likelihood; inapplicable families come
// last in declaration order and carry no scores.
std::vector<FitResult> rank_by_aic(const std::vector<double>& xs);

}  // namespace hermlab
