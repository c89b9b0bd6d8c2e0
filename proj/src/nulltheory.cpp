#include "glknot/nulltheory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace glknot {

namespace {

// Continued-fraction evaluation for the regularized incomplete beta
// function (modified Lentz).
double beta_cont_frac(double a, double b, double x) {
  constexpr double kTiny = 1e-30;
  constexpr double kEps = 1e-14;
  constexpr int kMaxIter = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("incomplete beta continued fraction did not converge");
}

// Regularized incomplete beta I_x(a, b).
double inc_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cont_frac(a, b, x) / a;
  return 1.0 - front * beta_cont_frac(b, a, 1.0 - x) / b;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

NullMarginal::NullMarginal(long n) : n_(n) {
  if (n < 3)
    throw std::domain_error("null marginal requires n >= 3, got " + std::to_string(n));
  sqrt_n_ = std::sqrt(static_cast<double>(n));
  const double nd = static_cast<double>(n);
  // log-gamma difference keeps the ratio finite for large n
  c_n_ = 2.0 / std::sqrt(nd * M_PI) *
         std::exp(std::lgamma((nd - 1.0) / 2.0) - std::lgamma((nd - 2.0) / 2.0));
  if (n == 3)
    a_n_ = std::sqrt(3.0 / 5.0);
  else
    a_n_ = std::sqrt((std::sqrt(8.0 * nd * nd - 16.0 * nd + 1.0) - 2.0 * nd + 1.0) /
                     (2.0 * (nd - 3.0)));
}

double NullMarginal::density(double x) const {
  if (x < 0.0 || x > sqrt_n_) return 0.0;
  const double nd = static_cast<double>(n_);
  const double base = 1.0 - x * x / nd;
  const double expo = (nd - 4.0) / 2.0;
  // x == sqrt(n) in floating point can leave base a hair above zero;
  // return the boundary limit instead of a rounding artifact
  if (base <= 0.0 || x == sqrt_n_)
    return expo > 0.0 ? 0.0 : (expo == 0.0 ? c_n_ : INFINITY);
  return c_n_ * std::pow(base, expo);
}

double NullMarginal::tail(double x) const {
  if (x <= 0.0) return 1.0;
  if (x >= sqrt_n_) return 0.0;
  const double nd = static_cast<double>(n_);
  // Pr(sqrt(n)|S| > x) = I_{1 - x^2/n}((n-2)/2, 1/2), the two-sided
  // t_{n-2} tail of the correlation under independence.
  return inc_beta((nd - 2.0) / 2.0, 0.5, 1.0 - x * x / nd);
}

MillsBounds NullMarginal::mills_bounds(double x) const {
  if (x <= 0.0 || x >= sqrt_n_)
    throw std::domain_error("Mills bounds require x in (0, sqrt(n))");
  const double nd = static_cast<double>(n_);
  const double one_minus = 1.0 - x * x / nd;
  MillsBounds mb;
  mb.upper = nd / (nd - 2.0) / x * one_minus;
  if (x > a_n_)
    mb.lower = (nd + 1.0) / (nd - 2.0) * x / (x * x + 1.0) * one_minus;
  return mb;
}

double NullMarginal::max_cdf_chen_stein(long p, double x) const {
  if (p < 2) throw std::domain_error("Chen-Stein approximation requires p >= 2");
  const double pairs = 0.5 * static_cast<double>(p) * static_cast<double>(p - 1);
  return std::exp(-pairs * tail(x));
}

double NullMarginal::chebyshev_count_bound(long p, double x, long k) const {
  const double pairs = 0.5 * static_cast<double>(p) * static_cast<double>(p - 1);
  const double fbar = tail(x);
  if (static_cast<double>(k) >= pairs * fbar)
    throw std::domain_error("Chebyshev count bound is vacuous: k >= C(p,2) Fbar(x)");
  const double frac = 1.0 - static_cast<double>(k) / (pairs * fbar);
  return (1.0 + 4.0 * static_cast<double>(p - 3) * fbar) /
         (pairs * pairs * fbar * fbar * frac * frac * frac);
}

ConjectureValue NullMarginal::conjecture_integral(long p, long k) const {
  if (k < 1) throw std::domain_error("conjecture integral requires k >= 1");
  const double pd = static_cast<double>(p);
  const double kd = static_cast<double>(k);
  const double upper =
      std::min(std::sqrt((4.0 - 2.0 / (kd + 2.0)) * std::log(pd)), sqrt_n_);
  // integrate in u = x / sqrt(n)
  const double sn = sqrt_n_;
  auto integrand = [&](double u) {
    const double x = sn * u;
    const double fb = tail(x);
    return sn * max_cdf_chen_stein(p, x) * std::pow(fb, kd - 1.0) * density(x);
  };
  const double value = integrate(integrand, 0.0, upper / sn);
  return ConjectureValue{value, std::pow(pd, 2.0 * kd) * value};
}

IntegralBound NullMarginal::int3_bounds_check(long p, long k) const {
  if (k < 0) throw std::domain_error("int3 check requires k >= 0");
  const double pairs = 0.5 * static_cast<double>(p) * static_cast<double>(p - 1);
  const double sn = sqrt_n_;
  auto integrand = [&](double u) {
    const double x = sn * u;
    const double fb = tail(x);
    return sn * std::exp(-pairs * fb) * std::pow(fb, static_cast<double>(k)) *
           density(x);
  };
  const double value = integrate(integrand, 0.0, 1.0);
  double bound = 1.0;
  for (long i = 2; i <= k; ++i) bound *= static_cast<double>(i);
  bound /= std::pow(pairs, static_cast<double>(k) + 1.0);
  return IntegralBound{value, bound};
}

double max_prob_lower_bound(long p) {
  if (p < 8)
    throw std::domain_error("max-probability bound is established only for p >= 8");
  const double pd = static_cast<double>(p);
  return std::exp(-std::pow(pd, 0.6) / (4.0 * std::sqrt(std::log(pd))));
}

double exp_survival(double mu, double t) {
  if (mu <= 0.0) throw std::domain_error("exponential mean must be positive");
  if (t < 0.0) throw std::domain_error("exponential survival requires t >= 0");
  return std::exp(-t / mu);
}

}  // namespace glknot
