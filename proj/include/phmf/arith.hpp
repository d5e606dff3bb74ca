#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace phmf::arith {

// Kronecker symbol (a|n), extended to all integers n including 0 and
// negatives. Completely multiplicative in n for fixed a.
int kronecker(long long a, long long n);

// Inverse of a modulo m, in [0, m). Throws NotCoprime.
long long mod_inverse(long long a, long long m);

// Prime factorization of n >= 1 as (p, exponent), p increasing.
std::vector<std::pair<long long, int>> factorize(long long n);

// Positive divisors of m >= 1 with their Moebius values, divisor increasing.
std::vector<std::pair<long long, int>> divisors_moebius(long long m);

// Smallest (t, u), t, u > 0, with t^2 - delta u^2 = 4. Requires delta > 0,
// delta = 0 or 1 mod 4, delta not a perfect square.
std::pair<long long, long long> pell_fundamental(long long delta);

long long isqrt(long long n);
bool is_square(long long n);
long long content(long long a, long long b, long long c);

// delta nonzero and congruent to 0 or 1 mod 4
bool is_discriminant(long long delta);
// 1, or squarefree = 1 mod 4, or 4m with m squarefree = 2, 3 mod 4
bool is_fundamental_discriminant(long long d);

inline constexpr double euler_gamma = 0.577215664901532860606512090082;

// Euler-Maclaurin evaluation, a > 0, s != 1. Accurate to ~1e-13 for
// s in (0, 30].
double hurwitz_zeta(double s, double a);
double zeta(double s);
double zeta_prime(double s);
double digamma(double x);

// L(s, chi_d) for d a fundamental discriminant or 1. At s = 1 uses the
// digamma closed form; d = 1 gives zeta(s) and throws PoleAtOne at s = 1.
double dirichlet_L(long long d, double s);
double dirichlet_L1(long long d);

} // namespace phmf::arith
