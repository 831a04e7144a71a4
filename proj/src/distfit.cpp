#include "hermlab/distfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hermlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

struct SampleStats {
  std::size_t m = 0;
  double mean = 0, var = 0;  // population variance
  double min = 0, max = 0;
  bool all_positive = true, all_nonneg = true;
  double mean_log = 0, var_log = 0;  // of the logs, valid when all_positive
};

SampleStats stats_of(const std::vector<double>& xs) {
  SampleStats st;
  st.m = xs.size();
  if (xs.empty()) return st;
  st.min = st.max = xs[0];
  double sum = 0;
  for (double x : xs) {
    sum += x;
    st.min = std::min(st.min, x);
    st.max = std::max(st.max, x);
    if (x <= 0) st.all_positive = false;
    if (x < 0) st.all_nonneg = false;
  }
  st.mean = sum / st.m;
  double ss = 0;
  for (double x : xs) ss += (x - st.mean) * (x - st.mean);
  st.var = ss / st.m;
  if (st.all_positive) {
    double ls = 0;
    for (double x : xs) ls += std::log(x);
    st.mean_log = ls / st.m;
    double lss = 0;
    for (double x : xs) lss += (std::log(x) - st.mean_log) * (std::log(x) - st.mean_log);
    st.var_log = lss / st.m;
  }
  return st;
}

}  // namespace

double digamma(double x) {
  if (!(x > 0)) throw std::invalid_argument("digamma: argument must be positive");
  double acc = 0;
  while (x < 8) {
    acc -= 1 / x;
    x += 1;
  }
  double inv = 1 / x, inv2 = inv * inv;
  // asymptotic expansion; the shift keeps the truncation below 1e-13
  double series = -inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 -
                  inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760))))));
  return acc + std::log(x) - inv / 2 + series;
}

double trigamma(double x) {
  if (!(x > 0)) throw std::invalid_argument("trigamma: argument must be positive");
  double acc = 0;
  while (x < 8) {
    acc += 1 / (x * x);
    x += 1;
  }
  double inv = 1 / x, inv2 = inv * inv;
  double series = inv * (1 + inv / 2 + inv2 * (1.0 / 6 - inv2 * (1.0 / 30 -
                  inv2 * (1.0 / 42 - inv2 * (1.0 / 30 - inv2 * (5.0 / 66))))));
  return acc + series;
}

double reg_lower_gamma(double a, double x) {
  if (!(a > 0) || x < 0) throw std::invalid_argument("reg_lower_gamma: bad arguments");
  if (x == 0) return 0;
  double lg = std::lgamma(a);
  if (x < a + 1) {
    // series for P(a,x)
    double term = 1 / a, sum = term;
    for (int i = 1; i < 1000; ++i) {
      term *= x / (a + i);
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(a * std::log(x) - x - lg);
  }
  // continued fraction for Q(a,x), modified Lentz
  const double tiny = 1e-300;
  double b = x + 1 - a, c = 1 / tiny, d = 1 / b, h = d;
  for (int i = 1; i < 1000; ++i) {
    double an = -(double)i * (i - a);
    b += 2;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1) < 3e-16) break;
  }
  double q = std::exp(a * std::log(x) - x - lg) * h;
  return 1 - q;
}

std::string family_token(DistFamily f) {
  switch (f) {
    case DistFamily::extreme_value: return "extreme_value";
    case DistFamily::gamma: return "gamma";
    case DistFamily::weibull: return "weibull";
    case DistFamily::lognormal: return "lognormal";
    case DistFamily::logistic: return "logistic";
    case DistFamily::normal: return "normal";
    case DistFamily::exponential: return "exponential";
    case DistFamily::rayleigh: return "rayleigh";
    case DistFamily::uniform: return "uniform";
  }
  throw std::invalid_argument("family_token: unknown family");
}

std::optional<DistFamily> family_from_token(std::string_view tok) {
  for (DistFamily f : kAllFamilies)
    if (family_token(f) == tok) return f;
  return std::nullopt;
}

int family_param_count(DistFamily f) {
  return (f == DistFamily::exponential || f == DistFamily::rayleigh) ? 1 : 2;
}

const char* param_name(DistFamily f, int which) {
  static const char* names[][2] = {
      {"loc", "scale"},     // extreme_value
      {"shape", "scale"},   // gamma
      {"shape", "scale"},   // weibull
      {"log_mean", "log_sd"},
      {"loc", "scale"},     // logistic
      {"mean", "sd"},
      {"rate", ""},
      {"scale", ""},
      {"lower", "upper"},
  };
  if (which < 0 || which >= family_param_count(f))
    throw std::invalid_argument("param_name: index out of range");
  return names[(int)f][which];
}

MeanVar dist_mean_var(DistFamily f, const DistParams& p) {
  switch (f) {
    case DistFamily::extreme_value:
      return {p.p1 - kEulerGamma * p.p2, kPi * kPi * p.p2 * p.p2 / 6};
    case DistFamily::gamma:
      return {p.p1 * p.p2, p.p1 * p.p2 * p.p2};
    case DistFamily::weibull: {
      double g1 = std::exp(std::lgamma(1 + 1 / p.p1));
      double g2 = std::exp(std::lgamma(1 + 2 / p.p1));
      return {p.p2 * g1, p.p2 * p.p2 * (g2 - g1 * g1)};
    }
    case DistFamily::lognormal: {
      double s2 = p.p2 * p.p2;
      double mean = std::exp(p.p1 + s2 / 2);
      return {mean, std::expm1(s2) * std::exp(2 * p.p1 + s2)};
    }
    case DistFamily::logistic:
      return {p.p1, kPi * kPi * p.p2 * p.p2 / 3};
    case DistFamily::normal:
      return {p.p1, p.p2 * p.p2};
    case DistFamily::exponential:
      return {1 / p.p1, 1 / (p.p1 * p.p1)};
    case DistFamily::rayleigh:
      return {p.p1 * std::sqrt(kPi / 2), (2 - kPi / 2) * p.p1 * p.p1};
    case DistFamily::uniform:
      return {(p.p1 + p.p2) / 2, (p.p2 - p.p1) * (p.p2 - p.p1) / 12};
  }
  throw std::invalid_argument("dist_mean_var: unknown family");
}

double extreme_value_mean(const DistParams& p, bool maximum_type) {
  return maximum_type ? p.p1 + kEulerGamma * p.p2 : p.p1 - kEulerGamma * p.p2;
}

std::optional<DistParams> moment_fit(DistFamily f, double mean, double var) {
  bool two = family_param_count(f) == 2;
  if (two && !(var > 0)) return std::nullopt;
  switch (f) {
    case DistFamily::extreme_value: {
      double scale = std::sqrt(6 * var) / kPi;
      return DistParams{mean + kEulerGamma * scale, scale};
    }
    case DistFamily::gamma:
      if (!(mean > 0)) return std::nullopt;
      return DistParams{mean * mean / var, var / mean};
    case DistFamily::weibull: {
      if (!(mean > 0)) return std::nullopt;
      double target = var / (mean * mean);
      auto excess = [](double k) {
        return std::expm1(std::lgamma(1 + 2 / k) - 2 * std::lgamma(1 + 1 / k));
      };
      double lo = 1, hi = 1;
      for (int i = 0; i < 200 && excess(lo) < target; ++i) lo /= 2;
      for (int i = 0; i < 200 && excess(hi) > target; ++i) hi *= 2;
      if (!(excess(lo) >= target && excess(hi) <= target)) return std::nullopt;
      for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        (excess(mid) >= target ? lo : hi) = mid;
      }
      double k = (lo + hi) / 2;
      return DistParams{k, mean * std::exp(-std::lgamma(1 + 1 / k))};
    }
    case DistFamily::lognormal: {
      if (!(mean > 0)) return std::nullopt;
      double s2 = std::log1p(var / (mean * mean));
      return DistParams{std::log(mean) - s2 / 2, std::sqrt(s2)};
    }
    case DistFamily::logistic:
      return DistParams{mean, std::sqrt(3 * var) / kPi};
    case DistFamily::normal:
      return DistParams{mean, std::sqrt(var)};
    case DistFamily::exponential:
      if (!(mean > 0)) return std::nullopt;
      return DistParams{1 / mean, 0};
    case DistFamily::rayleigh:
      if (!(mean > 0)) return std::nullopt;
      return DistParams{mean * std::sqrt(2 / kPi), 0};
    case DistFamily::uniform: {
      double d = std::sqrt(3 * var);
      return DistParams{mean - d, mean + d};
    }
  }
  return std::nullopt;
}

double log_pdf(DistFamily f, const DistParams& p, double x) {
  switch (f) {
    case DistFamily::extreme_value: {
      double z = (x - p.p1) / p.p2;
      return z - std::exp(z) - std::log(p.p2);
    }
    case DistFamily::gamma:
      if (x <= 0) return -kInf;
      return (p.p1 - 1) * std::log(x) - x / p.p2 - std::lgamma(p.p1) -
             p.p1 * std::log(p.p2);
    case DistFamily::weibull: {
      if (x <= 0) return -kInf;
      double lr = std::log(x) - std::log(p.p2);
      return std::log(p.p1) - std::log(p.p2) + (p.p1 - 1) * lr - std::exp(p.p1 * lr);
    }
    case DistFamily::lognormal: {
      if (x <= 0) return -kInf;
      double d = std::log(x) - p.p1;
      return -std::log(x) - std::log(p.p2) - 0.5 * std::log(2 * kPi) -
             d * d / (2 * p.p2 * p.p2);
    }
    case DistFamily::logistic: {
      double z = std::abs((x - p.p1) / p.p2);
      return -std::log(p.p2) - z - 2 * std::log1p(std::exp(-z));
    }
    case DistFamily::normal: {
      double d = x - p.p1;
      return -0.5 * std::log(2 * kPi * p.p2 * p.p2) - d * d / (2 * p.p2 * p.p2);
    }
    case DistFamily::exponential:
      if (x < 0) return -kInf;
      return std::log(p.p1) - p.p1 * x;
    case DistFamily::rayleigh:
      if (x <= 0) return -kInf;
      return std::log(x) - 2 * std::log(p.p1) - x * x / (2 * p.p1 * p.p1);
    case DistFamily::uniform:
      if (x < p.p1 || x > p.p2) return -kInf;
      return -std::log(p.p2 - p.p1);
  }
  throw std::invalid_argument("log_pdf: unknown family");
}

double dist_cdf(DistFamily f, const DistParams& p, double x) {
  switch (f) {
    case DistFamily::extreme_value:
      return -std::expm1(-std::exp((x - p.p1) / p.p2));
    case DistFamily::gamma:
      return x <= 0 ? 0 : reg_lower_gamma(p.p1, x / p.p2);
    case DistFamily::weibull:
      return x <= 0 ? 0 : -std::expm1(-std::exp(p.p1 * (std::log(x) - std::log(p.p2))));
    case DistFamily::lognormal:
      return x <= 0 ? 0 : 0.5 * std::erfc(-(std::log(x) - p.p1) / (p.p2 * std::sqrt(2.0)));
    case DistFamily::logistic: {
      double z = (x - p.p1) / p.p2;
      if (z >= 0) return 1 / (1 + std::exp(-z));
      double e = std::exp(z);
      return e / (1 + e);
    }
    case DistFamily::normal:
      return 0.5 * std::erfc(-(x - p.p1) / (p.p2 * std::sqrt(2.0)));
    case DistFamily::exponential:
      return x <= 0 ? 0 : -std::expm1(-p.p1 * x);
    case DistFamily::rayleigh:
      return x <= 0 ? 0 : -std::expm1(-x * x / (2 * p.p1 * p.p1));
    case DistFamily::uniform:
      return x <= p.p1 ? 0 : (x >= p.p2 ? 1 : (x - p.p1) / (p.p2 - p.p1));
  }
  throw std::invalid_argument("dist_cdf: unknown family");
}

double loglik(DistFamily f, const DistParams& p, const std::vector<double>& xs) {
  double acc = 0;
  for (double x : xs) acc += log_pdf(f, p, x);
  return acc;
}

namespace {

// profiled location at fixed scale: exp(loc/scale) = mean of exp(x/scale)
double ev_profile_loc(const std::vector<double>& xs, double beta) {
  double mx = -kInf;
  for (double x : xs) mx = std::max(mx, x / beta);
  double s = 0;
  for (double x : xs) s += std::exp(x / beta - mx);
  return beta * (mx + std::log(s / xs.size()));
}

// scale equation at the profiled location; positive near 0, negative at
// infinity, with the root at the joint maximum
double ev_phi(const std::vector<double>& xs, double beta) {
  std::size_t m = xs.size();
  double mx = -kInf;
  for (double x : xs) mx = std::max(mx, x / beta);
  double s = 0;
  for (double x : xs) s += std::exp(x / beta - mx);
  double shift = mx + std::log(s / m);
  double acc = 0;
  for (double x : xs) {
    double z = x / beta - shift;
    double ez = std::exp(x / beta - mx) * (m / s);
    acc += z * (ez - 1);
  }
  return acc - m;
}

std::optional<MleInfo> mle_extreme_value(const std::vector<double>& xs,
                                         const SampleStats& st) {
  if (st.m < 2 || !(st.var > 0)) return std::nullopt;
  double beta = std::sqrt(6 * st.var) / kPi;
  double lo = beta, hi = beta;
  for (int i = 0; i < 200 && ev_phi(xs, lo) <= 0; ++i) lo /= 2;
  for (int i = 0; i < 200 && ev_phi(xs, hi) >= 0; ++i) hi *= 2;
  if (!(ev_phi(xs, lo) > 0 && ev_phi(xs, hi) < 0)) return std::nullopt;
  int it = 0;
  while (it < 200 && hi - lo > 1e-15 * hi) {
    double mid = (lo + hi) / 2;
    (ev_phi(xs, mid) > 0 ? lo : hi) = mid;
    ++it;
  }
  double b = (lo + hi) / 2;
  return MleInfo{DistParams{ev_profile_loc(xs, b), b}, true, it};
}

std::optional<MleInfo> mle_gamma(const std::vector<double>& xs, const SampleStats& st) {
  (void)xs;
  if (st.m < 2 || !st.all_positive) return std::nullopt;
  double s = std::log(st.mean) - st.mean_log;
  if (!(s > 0)) return std::nullopt;  // constant sample
  double a = (3 - s + std::sqrt((s - 3) * (s - 3) + 24 * s)) / (12 * s);
  bool done = false;
  int it = 0;
  while (it < 200 && !done) {
    double fv = std::log(a) - digamma(a) - s;
    double fp = 1 / a - trigamma(a);
    double next = a - fv / fp;
    if (next <= 0) next = a / 2;
    done = std::abs(next - a) <= 1e-14 * a;
    a = next;
    ++it;
  }
  return MleInfo{DistParams{a, st.mean / a}, done, it};
}

std::optional<MleInfo> mle_weibull(const std::vector<double>& xs, const SampleStats& st) {
  if (st.m < 2 || !st.all_positive || !(st.max > st.min)) return std::nullopt;
  auto g = [&](double k) {
    double mx = -kInf;
    for (double x : xs) mx = std::max(mx, k * std::log(x));
    double aw = 0, bw = 0;
    for (double x : xs) {
      double w = std::exp(k * std::log(x) - mx);
      aw += w;
      bw += w * std::log(x);
    }
    return bw / aw - 1 / k - st.mean_log;
  };
  double lo = 1, hi = 1;
  for (int i = 0; i < 200 && g(lo) >= 0; ++i) lo /= 2;
  for (int i = 0; i < 200 && g(hi) <= 0; ++i) hi *= 2;
  if (!(g(lo) < 0 && g(hi) > 0)) return std::nullopt;
  int it = 0;
  while (it < 200 && hi - lo > 1e-15 * hi) {
    double mid = (lo + hi) / 2;
    (g(mid) < 0 ? lo : hi) = mid;
    ++it;
  }
  double k = (lo + hi) / 2;
  double mx = -kInf;
  for (double x : xs) mx = std::max(mx, k * std::log(x));
  double aw = 0;
  for (double x : xs) aw += std::exp(k * std::log(x) - mx);
  double log_lambda = (mx + std::log(aw / st.m)) / k;
  return MleInfo{DistParams{k, std::exp(log_lambda)}, true, it};
}

std::optional<MleInfo> mle_logistic(const std::vector<double>& xs, const SampleStats& st) {
  if (st.m < 2 || !(st.var > 0)) return std::nullopt;
  double mu = st.mean, sc = std::sqrt(3 * st.var) / kPi;
  auto grad = [&](double m0, double s0, double& gm, double& gs) {
    gm = gs = 0;
    for (double x : xs) {
      double z = (x - m0) / s0;
      double th = std::tanh(z / 2);
      gm += th;
      gs += z * th - 1;
    }
    gm /= s0;
    gs /= s0;
  };
  auto ll = [&](double m0, double s0) {
    return loglik(DistFamily::logistic, DistParams{m0, s0}, xs);
  };
  double cur = ll(mu, sc);
  for (int it = 0; it < 200; ++it) {
    double gm, gs;
    grad(mu, sc, gm, gs);
    double hm = 1e-6 * std::max(1.0, std::abs(mu)), hs = 1e-6 * sc;
    double gm1, gs1, gm2, gs2;
    grad(mu + hm, sc, gm1, gs1);
    grad(mu - hm, sc, gm2, gs2);
    double hmm = (gm1 - gm2) / (2 * hm), hsm = (gs1 - gs2) / (2 * hm);
    grad(mu, sc + hs, gm1, gs1);
    grad(mu, sc - hs, gm2, gs2);
    double hms = (gm1 - gm2) / (2 * hs), hss = (gs1 - gs2) / (2 * hs);
    double det = hmm * hss - hms * hsm;
    double dm, ds;
    if (std::abs(det) > 1e-30) {
      dm = -(gm * hss - gs * hms) / det;
      ds = -(gs * hmm - gm * hsm) / det;
    } else {
      dm = gm * sc * sc;  // gradient ascent fallback
      ds = gs * sc * sc;
    }
    double t = 1;
    for (int back = 0; back < 60; ++back, t /= 2) {
      double nm = mu + t * dm, ns = sc + t * ds;
      if (!(ns > 0)) continue;
      double nl = ll(nm, ns);
      if (nl >= cur - 1e-12 * std::abs(cur)) {
        bool done = std::abs(t * dm) <= 1e-13 * std::max(1.0, std::abs(mu)) &&
                    std::abs(t * ds) <= 1e-13 * sc;
        mu = nm;
        sc = ns;
        cur = nl;
        if (done) return MleInfo{DistParams{mu, sc}, true, it + 1};
        break;
      }
    }
  }
  return MleInfo{DistParams{mu, sc}, false, 200};
}

}  // namespace

std::optional<MleInfo> mle_fit_info(DistFamily f, const std::vector<double>& xs) {
  SampleStats st = stats_of(xs);
  switch (f) {
    case DistFamily::extreme_value:
      return mle_extreme_value(xs, st);
    case DistFamily::gamma:
      return mle_gamma(xs, st);
    case DistFamily::weibull:
      return mle_weibull(xs, st);
    case DistFamily::lognormal:
      if (st.m < 2 || !st.all_positive || !(st.var_log > 0)) return std::nullopt;
      return MleInfo{DistParams{st.mean_log, std::sqrt(st.var_log)}};
    case DistFamily::logistic:
      return mle_logistic(xs, st);
    case DistFamily::normal:
      if (st.m < 2 || !(st.var > 0)) return std::nullopt;
      return MleInfo{DistParams{st.mean, std::sqrt(st.var)}};
    case DistFamily::exponential:
      if (st.m < 1 || !st.all_nonneg || !(st.mean > 0)) return std::nullopt;
      return MleInfo{DistParams{1 / st.mean, 0}};
    case DistFamily::rayleigh: {
      if (st.m < 1 || !st.all_positive) return std::nullopt;
      double ss = 0;
      for (double x : xs) ss += x * x;
      return MleInfo{DistParams{std::sqrt(ss / (2 * st.m)), 0}};
    }
    case DistFamily::uniform:
      if (st.m < 2 || !(st.max > st.min)) return std::nullopt;
      return MleInfo{DistParams{st.min, st.max}};
  }
  throw std::invalid_argument("mle_fit_info: unknown family");
}

std::optional<DistParams> mle_fit(DistFamily f, const std::vector<double>& xs) {
  auto info = mle_fit_info(f, xs);
  if (!info) return std::nullopt;
  return info->params;
}

std::vector<FitResult> rank_by_aic(const std::vector<double>& xs) {
  std::vector<FitResult> out;
  for (DistFamily f : kAllFamilies) {
    FitResult r;
    r.family = f;
    auto info = mle_fit_info(f, xs);
    if (info) {
      double ll = loglik(f, info->params, xs);
      if (std::isfinite(ll)) {
        r.applicable = true;
        r.params = info->params;
        r.loglik = ll;
        r.aic = 2 * family_param_count(f) - 2 * ll;
        r.converged = info->converged;
        r.iterations = info->iterations;
      }
    }
    if (!r.applicable) {
      r.loglik = kNaN;
      r.aic = kNaN;
    }
    out.push_back(r);
  }
  std::stable_sort(out.begin(), out.end(), [](const FitResult& a, const FitResult& b) {
    if (a.applicable != b.applicable) return a.applicable;
    if (!a.applicable) return false;  // keep declaration order
    if (a.aic != b.aic) return a.aic < b.aic;
    if (a.loglik != b.loglik) return a.loglik > b.loglik;
    return false;
  });
  return out;
}

}  // namespace hermlab
