#pragma once

#include <complex>
#include <vector>

namespace phmf::specfun {

// Nodes and weights on [-1, 1]; cached per order.
const std::vector<std::pair<double, double>>& gauss_legendre(int n);

// nu >= 0, x > 0. Ascending series below x = 2, Steed's continued
// fractions above.
double besselJ(double nu, double x);

// nu >= 0, x > 0. Continued fraction plus Temme series / Wronskian.
double besselI(double nu, double x);
double besselK(double nu, double x);

// Upper incomplete gamma, y > 0, any real s (downward recursion for
// s <= 0, exponential integral at nonpositive integers).
double gamma_upper(double s, double y);

// Whittaker functions, y > 0. M by the Kummer series; W by the Laplace
// integral for U, which needs nu - mu + 1/2 >= 0.
double whittaker_M(double mu, double nu, double y);
double whittaker_W(double mu, double nu, double y);

struct PointReduction {
    std::complex<double> z;   // representative in the standard domain
    long long p = 1, q = 0, r = 0, s = 1; // z = (p z0 + q) / (r z0 + s)
};
PointReduction reduce_point(std::complex<double> z);

std::complex<double> dedekind_eta(std::complex<double> z);
std::complex<double> klein_j(std::complex<double> z);
std::complex<double> jacobi_theta(std::complex<double> z);

// -log(y |eta(z)|^4); invariant under the modular group.
double klf(std::complex<double> z);

} // namespace phmf::specfun
