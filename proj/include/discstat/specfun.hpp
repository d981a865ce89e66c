#ifndef DISCSTAT_SPECFUN_HPP
#define DISCSTAT_SPECFUN_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace discstat {

/// Accuracy budget shared by series, continued fractions and quadratures.
struct Tolerance {
    double rel_eps = 1e-10;
    double abs_eps = 1e-14;
    int max_terms = 1000000;
    int max_quad_refinements = 2000;
};

/// Thrown when a series, continued fraction or adaptive quadrature fails to
/// reach the requested Tolerance within its iteration budget.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

struct GammaPQ {
    double p;  // regularized lower incomplete gamma P(alpha, x)
    double q;  // regularized upper complement Q(alpha, x)
};

/// Regularized incomplete gamma pair (P, Q) with P + Q = 1.
/// Lower series for x < alpha + 1, Lentz continued fraction for Q otherwise;
/// prefactors evaluated in the log domain so alpha up to ~1e7 is safe.
GammaPQ reg_inc_gamma(double alpha, double x, Tolerance tol = {});

/// Regularized incomplete beta I_x(alpha, b).
double reg_inc_beta(double x, double alpha, double b, Tolerance tol = {});

struct ErfPair {
    double erf;
    double erfc;
};

ErfPair erf_erfc(double t);

/// CDF at x of the product of m independent Gamma(j, 1) variables.
/// Equals G^{m,1}_{1,m+1}(1; j..j, 0 | x) / ((j-1)!)^m. For m = 1 this is
/// exactly reg_inc_gamma(j, x).p; for m >= 2 it is evaluated by the
/// recursive convolution F_m(x) = E_T[F_{m-1}(x / T)], T ~ Gamma(j, 1),
/// with adaptive Gauss-Kronrod panels on a log-warped axis.
double gamma_product_cdf(int m, int j, double x, Tolerance tol = {});

/// Survival complement, G^{m+1,0}_{1,m+1}(1; 0, j..j | x) / ((j-1)!)^m,
/// computed by the same convolution with the upper tail at the base.
double gamma_product_sf(int m, int j, double x, Tolerance tol = {});

/// Leading small-z term of G^{m,1}_{1,m+1}(1; j..j, 0 | z):
/// (-1)^{m-1} / (j (m-1)!) * (log z)^{m-1} * z^j, for 0 < z < 1.
double meijer_small_z_leading(int m, int j, double z);

/// Polynomial b_k entering the uniform large-parameter expansion of the
/// incomplete gamma ratio. Coefficients are exact integers by the recursion
/// b_k = lambda (1 - lambda) b_{k-1}' + (2k - 1) lambda b_{k-1}, b_0 = 1.
struct BkPolynomial {
    int k = 0;
    std::vector<std::int64_t> coeffs;  // ascending powers of lambda

    double eval(double lambda) const;
};

/// b_0 .. b_{k_max}. Throws std::overflow_error if a coefficient would not
/// fit in 64 bits (k_max up to 14 is safe).
std::vector<BkPolynomial> bk_polynomials(int k_max);

}  // namespace discstat

#endif
