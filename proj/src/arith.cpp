#include "phmf/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "phmf/errors.hpp"

namespace phmf::arith {

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1LL) == 0 && (n & 1LL) == 0) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    int v = 0;
    while ((n & 1LL) == 0) {
        n >>= 1;
        ++v;
    }
    if (v & 1) {
        long long am8 = ((a % 8) + 8) % 8;
        if (am8 == 3 || am8 == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1LL) == 0) {
            a >>= 1;
            long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if ((a % 4) == 3 && (n % 4) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

long long mod_inverse(long long a, long long m) {
    if (m < 1) throw BadModulus("modulus must be positive");
    a %= m;
    if (a < 0) a += m;
    long long r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw NotCoprime("no inverse: gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw ParameterOutOfRange("factorize requires n >= 1");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::pair<long long, int>> divisors_moebius(long long m) {
    auto fac = factorize(m);
    std::vector<std::pair<long long, int>> out{{1, 1}};
    for (auto [p, e] : fac) {
        size_t base = out.size();
        long long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i)
                out.emplace_back(out[i].first * pk, k == 1 ? -out[i].second : 0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long isqrt(long long n) {
    if (n < 0) throw ParameterOutOfRange("isqrt of negative");
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(long long n) {
    if (n < 0) return false;
    long long r = isqrt(n);
    return r * r == n;
}

long long content(long long a, long long b, long long c) {
    return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
}

bool is_discriminant(long long delta) {
    if (delta == 0) return false;
    long long r = ((delta % 4) + 4) % 4;
    return r == 0 || r == 1;
}

bool is_fundamental_discriminant(long long d) {
    if (d == 1) return true;
    if (!is_discriminant(d)) return false;
    auto squarefree = [](long long n) {
        for (auto [p, e] : factorize(n))
            if (e > 1) return false;
        return true;
    };
    long long r = ((d % 4) + 4) % 4;
    if (r == 1) return squarefree(std::abs(d));
    long long m = d / 4;
    long long rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(std::abs(m));
}

namespace {

// One reduction/cycle step for an indefinite form (a, b, c), together with
// the column transform it applies. Successor b is the largest value = -b
// mod 2|c| below sqrt(delta) once |c| < sqrt(delta), else the absolutely
// least residue; this drives any form to a reduced one and then walks its
// cycle.
struct Form128 {
    __int128 a, b, c;
};

bool reduced_indef(const Form128& f, long long delta, long long sq) {
    if (f.b <= 0) return false;
    if (f.b * f.b >= delta) return false;
    __int128 t = 2 * (f.a < 0 ? -f.a : f.a);
    __int128 lo = t - f.b; // need lo < sqrt(delta)
    __int128 hi = t + f.b; // need hi > sqrt(delta)
    if (!(lo < 0 || lo * lo < delta)) return false;
    return hi > sq; // hi >= 0 always here
}

long long floordiv(long long x, long long y) {
    long long q = x / y, r = x % y;
    return (r != 0 && ((r < 0) != (y < 0))) ? q - 1 : q;
}

} // namespace

std::pair<long long, long long> pell_fundamental(long long delta) {
    if (delta <= 0 || !is_discriminant(delta))
        throw BadDiscriminant("pell_fundamental requires a positive discriminant");
    if (is_square(delta)) throw SquareDiscriminant("pell_fundamental requires a nonsquare discriminant");
    long long sq = isqrt(delta);
    long long b0 = ((delta % 2) + 2) % 2;
    Form128 f{1, b0, (static_cast<__int128>(b0) * b0 - delta) / 4};

    __int128 m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    bool tracking = false;
    Form128 start{0, 0, 0};
    int guard = 0;
    while (true) {
        if (++guard > 100000) throw std::logic_error("pell cycle failed to close");
        if (!tracking && reduced_indef(f, delta, sq)) {
            tracking = true;
            start = f;
            m00 = m11 = 1;
            m01 = m10 = 0;
        }
        long long c = static_cast<long long>(f.c);
        long long b = static_cast<long long>(f.b);
        long long ac = std::abs(c);
        long long m = 2 * ac;
        long long r = ((-b) % m + m) % m;
        long long bb;
        if (ac > sq) {
            bb = r > ac ? r - m : r; // least absolute residue
        } else {
            bb = r + m * floordiv(sq - r, m);
        }
        long long step = (b + bb) / (2 * c);
        Form128 nf{f.c, bb, (static_cast<__int128>(bb) * bb - delta) / (4 * f.c)};
        // column action (x, y) -> (-y, x + step*y)
        __int128 n00 = m01, n01 = -m00 + static_cast<__int128>(step) * m01;
        __int128 n10 = m11, n11 = -m10 + static_cast<__int128>(step) * m11;
        m00 = n00;
        m01 = n01;
        m10 = n10;
        m11 = n11;
        auto big = [](__int128 x) {
            __int128 lim = static_cast<__int128>(1) << 120;
            return x > lim || x < -lim;
        };
        if (big(m00) || big(m01) || big(m10) || big(m11))
            throw ParameterOutOfRange("pell solution exceeds supported range");
        f = nf;
        if (tracking && f.a == start.a && f.b == start.b && f.c == start.c) break;
    }
    // The cycle transform fixes the starting form, so it is (up to sign and
    // inversion) its fundamental automorph [(t-bu)/2, -cu; au, (t+bu)/2].
    __int128 tr = m00 + m11;
    if (tr < 0) tr = -tr;
    __int128 low = m10 < 0 ? -m10 : m10;
    __int128 a0 = start.a < 0 ? -start.a : start.a;
    if (a0 == 0 || low % a0 != 0) throw std::logic_error("pell automorph shape violated");
    __int128 u = low / a0;
    __int128 limit = static_cast<__int128>(1) << 62;
    if (tr >= limit || u >= limit) throw ParameterOutOfRange("pell solution exceeds supported range");
    long long t = static_cast<long long>(tr);
    long long uu = static_cast<long long>(u);
    if (static_cast<__int128>(t) * t - static_cast<__int128>(delta) * uu * uu != 4)
        throw std::logic_error("pell verification failed");
    return {t, uu};
}

namespace {

// Bernoulli(2j)/(2j)! for the Euler-Maclaurin tail.
constexpr double kB2jFact[8] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

} // namespace

double hurwitz_zeta(double s, double a) {
    if (a <= 0) throw ParameterOutOfRange("hurwitz_zeta requires a > 0");
    if (s == 1.0) throw PoleAtOne("hurwitz_zeta pole at s = 1");
    const int N = 50;
    double sum = 0, comp = 0;
    auto add = [&](double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for (int n = 0; n < N; ++n) add(std::pow(n + a, -s));
    double na = N + a;
    add(std::pow(na, 1.0 - s) / (s - 1.0));
    add(0.5 * std::pow(na, -s));
    double poch = s;             // (s)_{2j-1} running product
    double power = std::pow(na, -s - 1.0);
    for (int j = 1; j <= 8; ++j) {
        add(kB2jFact[j - 1] * poch * power);
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        power /= na * na;
    }
    return sum;
}

double zeta(double s) {
    return hurwitz_zeta(s, 1.0);
}

double zeta_prime(double s) {
    if (s == 1.0) throw PoleAtOne("zeta pole at s = 1");
    const int N = 50;
    const double a = 1.0;
    double sum = 0, comp = 0;
    auto add = [&](double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for (int n = 0; n < N; ++n) add(-std::log(n + a) * std::pow(n + a, -s));
    double na = N + a;
    double lg = std::log(na);
    add(std::pow(na, 1.0 - s) * (-lg / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0))));
    add(-0.5 * lg * std::pow(na, -s));
    double poch = s;
    double dig = 1.0 / s; // sum of 1/(s+i) over the Pochhammer factors
    double power = std::pow(na, -s - 1.0);
    for (int j = 1; j <= 8; ++j) {
        add(kB2jFact[j - 1] * poch * power * (dig - lg));
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        dig += 1.0 / (s + 2.0 * j - 1.0) + 1.0 / (s + 2.0 * j);
        power /= na * na;
    }
    return sum;
}

double digamma(double x) {
    if (x <= 0) throw ParameterOutOfRange("digamma requires x > 0");
    double result = 0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic: log x - 1/(2x) - sum B_{2j}/(2j x^{2j})
    static constexpr double kB2j2j[6] = {
        1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0,
    };
    double inv2 = 1.0 / (x * x);
    double term = inv2;
    double tail = 0;
    for (double coef : kB2j2j) {
        tail += coef * term;
        term *= inv2;
    }
    return result + std::log(x) - 0.5 / x - tail;
}

double dirichlet_L(long long d, double s) {
    if (!is_fundamental_discriminant(d))
        throw BadDiscriminant("dirichlet_L requires a fundamental discriminant or 1");
    if (d == 1) {
        if (s == 1.0) throw PoleAtOne("L(s, trivial) has a pole at s = 1");
        return zeta(s);
    }
    if (s == 1.0) return dirichlet_L1(d);
    long long q = std::abs(d);
    double sum = 0, comp = 0;
    for (long long r = 1; r <= q; ++r) {
        int chi = kronecker(d, r);
        if (!chi) continue;
        double x = chi * hurwitz_zeta(s, static_cast<double>(r) / q) - comp;
        double t = sum + x;
        comp = (t - sum) - x;
        sum = t;
    }
    return sum * std::pow(static_cast<double>(q), -s);
}

double dirichlet_L1(long long d) {
    if (!is_fundamental_discriminant(d))
        throw BadDiscriminant("dirichlet_L1 requires a fundamental discriminant or 1");
    if (d == 1) throw PoleAtOne("L(s, trivial) has a pole at s = 1");
    long long q = std::abs(d);
    double sum = 0, comp = 0;
    for (long long r = 1; r < q; ++r) {
        int chi = kronecker(d, r);
        if (!chi) continue;
        double x = chi * digamma(static_cast<double>(r) / q) - comp;
        double t = sum + x;
        comp = (t - sum) - x;
        sum = t;
    }
    return -sum / static_cast<double>(q);
}

} // namespace phmf::arith
