#include "phmf/qforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "phmf/arith.hpp"
#include "phmf/errors.hpp"

namespace phmf::qforms {

namespace {

long long floordiv(long long x, long long y) {
    long long q = x / y, r = x % y;
    return (r != 0 && ((r < 0) != (y < 0))) ? q - 1 : q;
}

void require_indefinite(long long delta, const char* who) {
    if (delta < 0) throw BadDiscriminant(std::string(who) + " requires positive discriminant");
    if (delta == 0) throw ZeroDiscriminant(std::string(who) + " requires nonzero discriminant");
    if (arith::is_square(delta))
        throw SquareDiscriminant(std::string(who) + " requires nonsquare discriminant");
}

} // namespace

long long Form::content() const {
    return arith::content(a, b, c);
}

Form apply(const Form& f, const UniMat& m) {
    long long a2 = f.eval(m.p, m.r);
    long long c2 = f.eval(m.q, m.s);
    long long b2 = 2 * (f.a * m.p * m.q + f.c * m.r * m.s) + f.b * (m.p * m.s + m.q * m.r);
    return Form{a2, b2, c2};
}

bool is_reduced(const Form& f) {
    long long delta = f.delta();
    if (delta == 0) throw ZeroDiscriminant("is_reduced requires nonzero discriminant");
    if (delta < 0) {
        if (f.a <= 0) return false;
        if (std::abs(f.b) > f.a || f.a > f.c) return false;
        if (f.b < 0 && (-f.b == f.a || f.a == f.c)) return false;
        return true;
    }
    if (arith::is_square(delta))
        throw SquareDiscriminant("is_reduced requires nonsquare discriminant");
    if (f.b <= 0 || f.b * f.b >= delta) return false;
    long long sq = arith::isqrt(delta);
    long long t = 2 * std::abs(f.a);
    long long lo = t - f.b;
    if (!(lo < 0 || lo * lo < delta)) return false;
    return t + f.b > sq;
}

Form rho(const Form& f) {
    long long delta = f.delta();
    require_indefinite(delta, "rho");
    long long sq = arith::isqrt(delta);
    long long c = f.c;
    long long ac = std::abs(c);
    long long m = 2 * ac;
    long long r = ((-f.b) % m + m) % m;
    long long bb;
    if (ac > sq)
        bb = (r > ac) ? r - m : r;
    else
        bb = r + m * floordiv(sq - r, m);
    return Form{c, bb, (bb * bb - delta) / (4 * c)};
}

Form reduce(const Form& f) {
    long long delta = f.delta();
    if (delta == 0) throw ZeroDiscriminant("reduce requires nonzero discriminant");
    if (delta < 0) {
        if (f.a < 0) throw DomainError("reduce requires a positive definite form");
        Form g = f;
        for (int guard = 0; guard < 100000; ++guard) {
            long long k = floordiv(g.b + g.a, 2 * g.a);
            long long b2 = g.b - 2 * k * g.a;
            Form t{g.a, b2, (b2 * b2 - delta) / (4 * g.a)};
            if (t.a > t.c) {
                g = Form{t.c, -t.b, t.a};
                continue;
            }
            g = t;
            if (g.b < 0 && (-g.b == g.a || g.a == g.c)) g.b = -g.b;
            return g;
        }
        throw std::logic_error("definite reduction failed to terminate");
    }
    require_indefinite(delta, "reduce");
    Form g = f;
    for (int guard = 0; guard < 100000; ++guard) {
        if (is_reduced(g)) return g;
        g = rho(g);
    }
    throw std::logic_error("indefinite reduction failed to terminate");
}

std::vector<Form> cycle(const Form& f) {
    require_indefinite(f.delta(), "cycle");
    Form start = reduce(f);
    std::vector<Form> out{start};
    Form g = rho(start);
    while (g != start) {
        out.push_back(g);
        g = rho(g);
        if (out.size() > 100000) throw std::logic_error("cycle failed to close");
    }
    auto least = std::min_element(out.begin(), out.end());
    std::rotate(out.begin(), least, out.end());
    return out;
}

bool equivalent(const Form& f, const Form& g) {
    if (f.delta() != g.delta()) return false;
    long long delta = f.delta();
    if (delta == 0) throw ZeroDiscriminant("equivalent requires nonzero discriminant");
    if (delta < 0) return reduce(f) == reduce(g);
    require_indefinite(delta, "equivalent");
    Form rg = reduce(g);
    for (const Form& h : cycle(f))
        if (h == rg) return true;
    return false;
}

std::vector<Form> class_list(long long delta) {
    if (delta == 0) throw ZeroDiscriminant("class_list requires nonzero discriminant");
    if (!arith::is_discriminant(delta)) throw BadDiscriminant("not a discriminant");
    std::vector<Form> out;
    if (delta < 0) {
        long long amax = arith::isqrt(-delta / 3);
        for (long long a = 1; a <= amax; ++a) {
            for (long long b = -a; b <= a; ++b) {
                if (((b * b - delta) % (4 * a)) != 0) continue;
                long long c = (b * b - delta) / (4 * a);
                if (c < a) continue;
                if (b < 0 && (-b == a || a == c)) continue;
                out.push_back(Form{a, b, c});
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    require_indefinite(delta, "class_list");
    long long sq = arith::isqrt(delta);
    std::set<Form> reduced;
    for (long long b = 2 - (delta & 1); b <= sq; b += 2) {
        long long n = (delta - b * b) / 4;
        for (long long av = 1; 2 * av < sq + b + 1; ++av) {
            if (n % av) continue;
            long long lo = 2 * av - b;
            if (!(lo < 0 || lo * lo < delta)) continue;
            if (!((2 * av + b) * (2 * av + b) > delta)) continue;
            reduced.insert(Form{av, b, -(n / av)});
            reduced.insert(Form{-av, b, n / av});
        }
    }
    std::set<Form> visited;
    for (const Form& f : reduced) {
        if (visited.count(f)) continue;
        auto cyc = cycle(f);
        for (const Form& h : cyc) visited.insert(h);
        out.push_back(*std::min_element(cyc.begin(), cyc.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int w(const Form& f) {
    if (f.delta() >= 0) throw DomainError("w requires a definite form");
    if (f.a <= 0) throw DomainError("w requires a positive definite form");
    Form r = reduce(f);
    if (r.a == r.b && r.b == r.c) return 3;
    if (r.b == 0 && r.a == r.c) return 2;
    return 1;
}

std::complex<double> cm_point(const Form& f) {
    if (f.delta() >= 0) throw DomainError("cm_point requires a definite form");
    if (f.a <= 0) throw DomainError("cm_point requires a positive definite form");
    double den = 2.0 * static_cast<double>(f.a);
    return {-static_cast<double>(f.b) / den, std::sqrt(static_cast<double>(-f.delta())) / den};
}

int genus_character(const Form& f, long long D) {
    if (!arith::is_fundamental_discriminant(D))
        throw BadDiscriminant("genus character needs a fundamental discriminant or 1");
    long long delta = f.delta();
    if (delta == 0) throw ZeroDiscriminant("genus character requires nonzero discriminant");
    if (delta % D != 0) throw NotDivisible("form discriminant not divisible by D");
    long long d = delta / D;
    if (!arith::is_discriminant(d) && d != 1)
        throw BadDiscriminant("cofactor of D is not a discriminant");
    if (D == 1) return 1;
    if (std::gcd(f.content(), std::abs(D)) > 1) return 0;
    for (long long x = 0; x <= 50; ++x) {
        for (long long y = -50; y <= 50; ++y) {
            long long r = f.eval(x, y);
            if (r == 0) continue;
            if (std::gcd(std::abs(r), std::abs(D)) != 1) continue;
            return arith::kronecker(D, r);
        }
    }
    throw std::logic_error("no represented value coprime to D found");
}

UniMat automorph(const Form& f) {
    long long delta = f.delta();
    require_indefinite(delta, "automorph");
    long long g = f.content();
    auto [t, u] = arith::pell_fundamental(delta / (g * g));
    long long ag = f.a / g, bg = f.b / g, cg = f.c / g;
    UniMat m{(t - bg * u) / 2, -cg * u, ag * u, (t + bg * u) / 2};
    if (m.p * m.s - m.q * m.r != 1) throw std::logic_error("automorph determinant violated");
    if (apply(f, m) != f) throw std::logic_error("automorph does not stabilize the form");
    return m;
}

} // namespace phmf::qforms
