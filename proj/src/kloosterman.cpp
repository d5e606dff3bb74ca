#include "phmf/kloosterman.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "phmf/arith.hpp"
#include "phmf/errors.hpp"
#include "phmf/parallel.hpp"
#include "phmf/specfun.hpp"

namespace phmf::kloosterman {

namespace {

const double PI = std::acos(-1.0);
using cplx = std::complex<double>;

long long euler_phi(long long x) {
    long long r = x;
    for (auto [p, e] : arith::factorize(x)) {
        (void)e;
        r = r / p * (p - 1);
    }
    return r;
}

// lambda from a half-integral weight; throws unless 2k is an odd integer
long long lambda_of(double k) {
    long long twok = std::llround(2 * k);
    if (std::abs(2 * k - (double)twok) > 1e-9 || (twok & 1) == 0)
        throw ParameterOutOfRange("weight must be half-integral");
    return (twok - 1) / 2;
}

// e(r/M) split as e(r0/M) e(256 r1/M) so each lookup is a product of two
// directly rounded exponentials of exact rational arguments
struct PhaseTable {
    long long M = 0;
    std::vector<cplx> lo, hi;
    void build(long long M_) {
        M = M_;
        double w = 2 * PI / (double)M;
        lo.resize(256);
        for (int j = 0; j < 256; ++j) lo[(size_t)j] = {std::cos(w * j), std::sin(w * j)};
        hi.resize((size_t)(M >> 8) + 1);
        for (size_t j = 0; j < hi.size(); ++j) {
            double arg = w * 256.0 * (double)j;
            hi[j] = {std::cos(arg), std::sin(arg)};
        }
    }
    cplx at(long long r) const { return lo[(size_t)(r & 255)] * hi[(size_t)(r >> 8)]; }
};

// character code for one unit: bit0 set when the value is imaginary
// (d = 3 mod 4), bit1 set for a negative sign
inline void accumulate(cplx& acc, int code, cplx ph) {
    switch (code) {
        case 0: acc += ph; break;
        case 1: acc += cplx(-ph.imag(), ph.real()); break;
        case 2: acc -= ph; break;
        default: acc += cplx(ph.imag(), -ph.real()); break;
    }
}

} // namespace

namespace detail {

std::complex<double> unit_sum_direct(long long m, long long n, long long c, bool twisted,
                                     int lambda_parity) {
    if (c < 1) throw ParameterOutOfRange("modulus must be positive");
    if (twisted && c % 4 != 0) throw BadModulus("twisted sums need 4 | c");
    if (c == 1) return {1.0, 0.0};
    long long m0 = ((m % c) + c) % c, n0 = ((n % c) + c) % c;
    par::KahanC acc;
    for (long long d = 1; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        long long a = arith::mod_inverse(d, c);
        long long r = (long long)(((__int128)a * m0 + (__int128)d * n0) % c);
        double arg = 2 * PI * (double)r / (double)c;
        cplx term(std::cos(arg), std::sin(arg));
        if (twisted) {
            double sign = (double)arith::kronecker(c, d);
            if ((d & 3) == 1) {
                term *= sign;
            } else {
                if (lambda_parity) sign = -sign;
                term = cplx(-term.imag(), term.real()) * sign;
            }
        }
        acc.add(term);
    }
    return acc.value();
}

std::vector<std::complex<double>> unit_sums_fast(long long M, bool twisted, int lambda_parity,
                                                 long long m, const std::vector<long long>& ns) {
    if (M < 1) throw ParameterOutOfRange("modulus must be positive");
    if (twisted && M % 4 != 0) throw BadModulus("twisted sums need 4 | c");
    size_t np = ns.size();
    std::vector<cplx> out(np, cplx(0, 0));
    if (M == 1) {
        std::fill(out.begin(), out.end(), cplx(1, 0));
        return out;
    }
    if (M >= 3000000000LL) {
        // residues would overflow the int64 fast path; fall back
        for (size_t j = 0; j < np; ++j)
            out[j] = unit_sum_direct(m, ns[j], M, twisted, lambda_parity);
        return out;
    }

    auto fac = arith::factorize(M);
    int e2 = 0;
    std::vector<long long> op;   // odd primes dividing M
    std::vector<int> oddexp;     // 1 when the exponent is odd
    for (auto [p, e] : fac) {
        if (p == 2) {
            e2 = e;
        } else {
            op.push_back(p);
            oddexp.push_back(e & 1);
        }
    }
    long long h = M >> e2;
    bool h3mod4 = (h & 3) == 3;

    std::vector<std::vector<int8_t>> leg(op.size());
    for (size_t i = 0; i < op.size(); ++i) {
        long long p = op[i];
        auto& t = leg[i];
        t.assign((size_t)p, (int8_t)-1);
        t[0] = 0;
        for (long long r = 1; r < p; ++r) t[(size_t)((r * r) % p)] = 1;
    }
    // (2/d) by d mod 8
    static const int two_tab[8] = {0, 1, 0, -1, 0, -1, 0, 1};

    PhaseTable tab;
    tab.build(M);

    long long m0 = ((m % M) + M) % M;
    std::vector<long long> n0(np);
    for (size_t j = 0; j < np; ++j) n0[j] = ((ns[j] % M) + M) % M;
    bool need_inv = m0 != 0;

    std::vector<cplx> acc(np, cplx(0, 0));

    const size_t B = 2048;
    std::vector<long long> dbuf, pre, abuf;
    std::vector<int8_t> cbuf;
    dbuf.reserve(B);
    cbuf.reserve(B);
    pre.reserve(B);
    abuf.reserve(B);

    auto flush = [&] {
        size_t nb = dbuf.size();
        if (nb == 0) return;
        abuf.assign(nb, 0);
        if (need_inv) {
            pre.resize(nb);
            long long run = 1;
            for (size_t i = 0; i < nb; ++i) {
                run = (long long)((__int128)run * dbuf[i] % M);
                pre[i] = run;
            }
            long long t = arith::mod_inverse(pre[nb - 1], M);
            for (size_t i = nb; i-- > 1;) {
                abuf[i] = (long long)((__int128)t * pre[i - 1] % M);
                t = (long long)((__int128)t * dbuf[i] % M);
            }
            abuf[0] = t;
        }
        for (size_t i = 0; i < nb; ++i) {
            long long am = need_inv ? (abuf[i] * m0) % M : 0;
            for (size_t j = 0; j < np; ++j) {
                long long r = am + dbuf[i] * n0[j];
                r %= M;
                accumulate(acc[j], cbuf[i], tab.at(r));
            }
        }
        dbuf.clear();
        cbuf.clear();
    };

    long long step = twisted ? 2 : 1;
    size_t npr = op.size();
    std::vector<long long> dm(npr);
    for (size_t i = 0; i < npr; ++i) dm[i] = 1 % op[i];

    for (long long d = 1; d < M; d += step) {
        bool unit = (e2 == 0) || (d & 1);
        if (unit)
            for (size_t i = 0; i < npr; ++i)
                if (dm[i] == 0) {
                    unit = false;
                    break;
                }
        if (unit) {
            int code = 0;
            if (twisted) {
                int sign = 1;
                if (e2 & 1) sign *= two_tab[d & 7];
                for (size_t i = 0; i < npr; ++i)
                    if (oddexp[i]) sign *= leg[i][(size_t)dm[i]];
                bool d3mod4 = (d & 3) == 3;
                if (h3mod4 && d3mod4) sign = -sign;
                if (d3mod4) {
                    code = 1;
                    if (lambda_parity) sign = -sign;
                }
                if (sign < 0) code += 2;
            }
            dbuf.push_back(d);
            cbuf.push_back((int8_t)code);
            if (dbuf.size() == B) flush();
        }
        for (size_t i = 0; i < npr; ++i) {
            dm[i] += step;
            if (dm[i] >= op[i]) dm[i] -= op[i];
        }
    }
    flush();
    for (size_t j = 0; j < np; ++j) out[j] = acc[j];
    return out;
}

} // namespace detail

std::complex<double> kloosterman_K(long long m, long long n, long long c) {
    return detail::unit_sum_direct(m, n, c, false, 0);
}

std::complex<double> kloosterman_Ktilde(double k, long long m, long long n, long long c) {
    int lp = (int)(lambda_of(k) & 1);
    return detail::unit_sum_direct(m, n, c, true, lp);
}

std::complex<double> ktilde_half_00(long long c) {
    if (c < 1) throw ParameterOutOfRange("modulus must be positive");
    if (!arith::is_square(c)) return {0.0, 0.0};
    int v2 = 0;
    long long h = c;
    while (h % 2 == 0) {
        h /= 2;
        ++v2;
    }
    // 4c = 2^{v2+2} h, so 2^{e-2} = 2^{v2}
    double t = (double)euler_phi(h) * (double)(1LL << v2);
    return {t, t};
}

bool plus_condition(double k, long long idx) {
    long long lambda = lambda_of(k);
    long long v = (lambda & 1) ? -idx : idx;
    long long r = ((v % 4) + 4) % 4;
    return r == 0 || r == 1;
}

namespace {

// branch factor shared by both coefficient families; cc is the modulus
// appearing inside the Bessel arguments and the powers
double branch_factor(double k, long long m, long long n, double s, double cc) {
    if (m != 0 && n != 0) {
        double absmn = std::abs((double)m) * std::abs((double)n);
        double arg = 4 * PI * std::sqrt(absmn) / cc;
        double bes = ((m > 0) == (n > 0)) ? specfun::besselJ(2 * s - 1, arg)
                                          : specfun::besselI(2 * s - 1, arg);
        return std::pow(absmn, (1 - k) / 2) * bes;
    }
    if (m + n != 0)
        return std::pow(2.0, k - 1) * std::pow(PI, s + k / 2 - 1) *
               std::pow(std::abs((double)(m + n)), s - k / 2) * std::pow(cc, 1 - 2 * s);
    return std::pow(2.0, 2 * k - 2) * std::pow(PI, k - 1) * std::tgamma(2 * s) *
           std::pow(2 * cc, 1 - 2 * s);
}

cplx ipow_minus(double k) {
    // i^{-k}; exact values at integers, principal branch otherwise
    long long ki = std::llround(k);
    if (std::abs(k - (double)ki) < 1e-12) {
        switch (((ki % 4) + 4) % 4) {
            case 0: return {1, 0};
            case 1: return {0, -1};
            case 2: return {-1, 0};
            default: return {0, 1};
        }
    }
    return std::polar(1.0, -PI * k / 2);
}

} // namespace

std::vector<CoeffResult> coeff_c_batch(long long k, long long m, const std::vector<long long>& ns,
                                       double s, long long c_max) {
    if (!(s > 1)) throw ConvergenceRegion("series requires s > 1");
    if (c_max < 1) throw ParameterOutOfRange("c_max must be positive");
    size_t np = ns.size();
    std::vector<long long> walk_ns;
    for (size_t j = 0; j < np; ++j)
        if (!(m == 0 && ns[j] == 0)) walk_ns.push_back(ns[j]);

    auto terms_at = [&](long long c) -> std::vector<cplx> {
        std::vector<cplx> t(np);
        std::vector<cplx> Kc;
        if (!walk_ns.empty()) Kc = detail::unit_sums_fast(c, false, 0, m, walk_ns);
        size_t wi = 0;
        for (size_t j = 0; j < np; ++j) {
            cplx K = (m == 0 && ns[j] == 0) ? cplx((double)euler_phi(c), 0.0) : Kc[wi++];
            t[j] = K * (branch_factor((double)k, m, ns[j], s, (double)c) / (double)c);
        }
        return t;
    };

    auto sums = par::sum_blocks_vec(1, c_max + 1, 1024, np, [&](long long a, long long b) {
        std::vector<par::KahanC> blk(np);
        for (long long c = a; c < b; ++c) {
            auto t = terms_at(c);
            for (size_t j = 0; j < np; ++j) blk[j].add(t[j]);
        }
        std::vector<cplx> v(np);
        for (size_t j = 0; j < np; ++j) v[j] = blk[j].value();
        return v;
    });

    cplx pf = 2.0 * PI * ipow_minus((double)k);
    auto last = terms_at(c_max);
    std::vector<CoeffResult> res(np);
    for (size_t j = 0; j < np; ++j) {
        res[j].value = pf * sums[j];
        res[j].last_term = std::abs(pf * last[j]);
    }
    return res;
}

CoeffResult coeff_c(long long k, long long m, long long n, double s, long long c_max) {
    return coeff_c_batch(k, m, {n}, s, c_max)[0];
}

std::vector<CoeffResult> coeff_b_batch(double k, long long m, const std::vector<long long>& ns,
                                       double s, long long c_max) {
    long long lambda = lambda_of(k);
    int lp = (int)(lambda & 1);
    if (!(s > 1)) throw ConvergenceRegion("series requires s > 1");
    if (c_max < 1) throw ParameterOutOfRange("c_max must be positive");
    if (!plus_condition(k, m)) throw PlusCondition("row index violates the plus-condition");
    for (long long n : ns)
        if (!plus_condition(k, n)) throw PlusCondition("column index violates the plus-condition");

    size_t np = ns.size();
    // column indices that need a unit walk; m = n = 0 has a closed form
    std::vector<long long> walk_ns;
    for (size_t j = 0; j < np; ++j)
        if (!(m == 0 && ns[j] == 0)) walk_ns.push_back(ns[j]);

    auto terms_at = [&](long long c) -> std::vector<cplx> {
        std::vector<cplx> t(np);
        double w = (c & 1) ? 2.0 : 1.0;   // 1 + (4/c)
        std::vector<cplx> Kt;
        if (!walk_ns.empty()) Kt = detail::unit_sums_fast(4 * c, true, lp, m, walk_ns);
        size_t wi = 0;
        for (size_t j = 0; j < np; ++j) {
            cplx K;
            if (m == 0 && ns[j] == 0) {
                K = ktilde_half_00(c);
                if (lp) K = cplx(K.imag(), -K.real());
            } else {
                K = Kt[wi++];
            }
            t[j] = K * (w * branch_factor(k, m, ns[j], s, 4.0 * (double)c) / (4.0 * (double)c));
        }
        return t;
    };

    auto sums = par::sum_blocks_vec(1, c_max + 1, 1024, np, [&](long long a, long long b) {
        std::vector<par::KahanC> blk(np);
        for (long long c = a; c < b; ++c) {
            auto t = terms_at(c);
            for (size_t j = 0; j < np; ++j) blk[j].add(t[j]);
        }
        std::vector<cplx> v(np);
        for (size_t j = 0; j < np; ++j) v[j] = blk[j].value();
        return v;
    });

    cplx pf = 2.0 * PI * ipow_minus(k);
    auto last = terms_at(c_max);
    std::vector<CoeffResult> res(np);
    for (size_t j = 0; j < np; ++j) {
        res[j].value = pf * sums[j];
        res[j].last_term = std::abs(pf * last[j]);
    }
    return res;
}

CoeffResult coeff_b(double k, long long m, long long n, double s, long long c_max) {
    return coeff_b_batch(k, m, {n}, s, c_max)[0];
}

double b_zero_closed(double s) {
    if (!(s > 0.75)) throw ConvergenceRegion("closed form requires s > 3/4");
    return std::sqrt(PI) * std::pow(2.0, 2.5 - 6 * s) * std::tgamma(2 * s) *
           arith::zeta(4 * s - 2) / arith::zeta(4 * s - 1);
}

} // namespace phmf::kloosterman
