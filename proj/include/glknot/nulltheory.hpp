#ifndef GLKNOT_NULLTHEORY_HPP
#define GLKNOT_NULLTHEORY_HPP

#include <functional>
#include <optional>

namespace glknot {

/// Upper and (where valid) lower bound on the Mills ratio Fbar_n/f_n.
/// The lower bound holds only on (a_n, sqrt(n)).
struct MillsBounds {
  std::optional<double> lower;
  double upper;
};

struct IntegralBound {
  double integral;
  double bound;
};

struct ConjectureValue {
  double value;    // the integral itself
  double scaled;   // p^{2k} * value, for inspecting decay
};

/// Null marginal distribution of sqrt(n)|S_ij| for independent
/// spherical data: density c_n (1 - x^2/n)^{(n-4)/2} on [0, sqrt(n)].
class NullMarginal {
 public:
  /// Requires n >= 3.
  explicit NullMarginal(long n);

  long n() const { return n_; }
  double c_n() const { return c_n_; }
  double a_n() const { return a_n_; }
  double support_max() const { return sqrt_n_; }

  /// Density f_n(x); 0 outside [0, sqrt(n)].
  double density(double x) const;

  /// Tail Fbar_n(x) = Pr(sqrt(n)|S_ij| > x), evaluated through the
  /// regularized incomplete beta representation of the correlation null.
  double tail(double x) const;

  /// Mills-ratio bounds at x in (0, sqrt(n)); lower is absent for
  /// x <= a_n.  Throws std::domain_error outside the support interior.
  MillsBounds mills_bounds(double x) const;

  /// Chen-Stein approximation exp(-C(p,2) Fbar_n(x)) to the CDF of the
  /// scaled maximum absolute correlation.  Pointwise error is bounded
  /// by 2 p^3 Fbar_n^2(x).
  double max_cdf_chen_stein(long p, double x) const;

  /// Third-moment Chebyshev bound on Pr(fewer than k of the C(p,2)
  /// entries exceed x).  Requires k < C(p,2) Fbar_n(x).
  double chebyshev_count_bound(long p, double x, long k) const;

  /// Numeric value of int_0^{sqrt((4 - 2/(k+2)) log p)}
  /// ChenStein(x) Fbar^{k-1}(x) f(x) dx, with p^{2k}-scaled companion.
  /// Exploratory output for the unproven k > 1 cases.
  ConjectureValue conjecture_integral(long p, long k) const;

  /// Quadrature value of int_0^{sqrt(n)} exp(-C(p,2) Fbar) Fbar^k f dx
  /// together with the closed-form bound k!/C(p,2)^{k+1}.
  IntegralBound int3_bounds_check(long p, long k) const;

 private:
  long n_;
  double sqrt_n_;
  double c_n_;
  double a_n_;
};

/// exp(-p^{3/5} / (4 sqrt(log p))), an upper bound for
/// Pr(max sqrt(n)|S_ij| < sqrt(log p)).  Established for p >= 8.
double max_prob_lower_bound(long p);

/// Survival of the exponential distribution with MEAN mu: exp(-t/mu).
double exp_survival(double mu, double t);

/// Adaptive Simpson quadrature, absolute tolerance 1e-10 by default.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

}  // namespace glknot

#endif
