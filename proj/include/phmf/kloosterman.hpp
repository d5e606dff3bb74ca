#pragma once

#include <complex>
#include <vector>

namespace phmf::kloosterman {

// One truncated coefficient series. last_term is the magnitude of the
// c = c_max term (prefactor included), reported as a convergence
// diagnostic; the caller decides whether the truncation was enough.
struct CoeffResult {
    std::complex<double> value{0.0, 0.0};
    double last_term = 0.0;
};

// K(m,n,c) = sum over units d mod c, with a = d^{-1} mod c, of
// e((am+dn)/c). Real-valued in exact arithmetic.
std::complex<double> kloosterman_K(long long m, long long n, long long c);

// Twisted sum over units d mod c of (c/d) eps_d^{2k} e((am+dn)/c) for
// half-integral k, where eps_d = 1 for d = 1 mod 4 and i for d = 3 mod 4.
// The modulus must satisfy 4 | c.
std::complex<double> kloosterman_Ktilde(double k, long long m, long long n, long long c);

// Closed form for the twisted sum at m = n = 0 and weight 1/2, modulus 4c:
// writing 4c = 2^e h with h odd, the value is (1+i) phi(h) 2^{e-2} when c
// is a perfect square and 0 otherwise.
std::complex<double> ktilde_half_00(long long c);

// Plus-space support test for k = lambda + 1/2: (-1)^lambda idx = 0,1 mod 4.
bool plus_condition(double k, long long idx);

// Fourier coefficient series of the integral-weight Poincare family:
// 2 pi i^{-k} sum_{c<=c_max} K(m,n,c)/c times a Bessel or power factor
// chosen by the signs of m and n. Requires s > 1.
CoeffResult coeff_c(long long k, long long m, long long n, double s, long long c_max);

// Half-integral-weight analogue over moduli 4c with the twisted sums and
// the weight (1 + (4/c)). Requires s > 1 and the plus-condition on m, n.
CoeffResult coeff_b(double k, long long m, long long n, double s, long long c_max);

// coeff_c for one m and several n, sharing each modulus walk; bitwise
// identical to the one-at-a-time calls.
std::vector<CoeffResult> coeff_c_batch(long long k, long long m, const std::vector<long long>& ns,
                                       double s, long long c_max);

// Same series for one m and several n, sharing the unit walk of each
// modulus across all column indices. Results are bitwise identical to the
// one-at-a-time calls.
std::vector<CoeffResult> coeff_b_batch(double k, long long m, const std::vector<long long>& ns,
                                       double s, long long c_max);

// b at k = 1/2, m = n = 0 in closed form:
// sqrt(pi) 2^{5/2-6s} Gamma(2s) zeta(4s-2)/zeta(4s-1), valid for s > 3/4.
double b_zero_closed(double s);

namespace detail {

// Reference walk: one extended-gcd inverse per unit, phases from exact
// residues. Slow but obviously correct; the fast engine is tested against
// it. twisted requires 4 | c; lambda_parity selects eps_d^{2k} for
// lambda even (0) or odd (1).
std::complex<double> unit_sum_direct(long long m, long long n, long long c, bool twisted,
                                     int lambda_parity);

// Fast engine: shared factorization, incremental residue counters for the
// character, batched modular inversion, and phases looked up from exact
// residues. Returns one sum per entry of ns.
std::vector<std::complex<double>> unit_sums_fast(long long c, bool twisted, int lambda_parity,
                                                 long long m, const std::vector<long long>& ns);

} // namespace detail

} // namespace phmf::kloosterman
