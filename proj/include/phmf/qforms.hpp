#pragma once

#include <compare>
#include <complex>
#include <vector>

namespace phmf::qforms {

// Integral binary quadratic form a x^2 + b xy + c y^2.
struct Form {
    long long a = 0, b = 0, c = 0;
    auto operator<=>(const Form&) const = default;
    long long delta() const { return b * b - 4 * a * c; }
    long long content() const;
    bool primitive() const { return content() == 1; }
    long long eval(long long x, long long y) const { return a * x * x + b * x * y + c * y * y; }
};

// Column-acting unimodular matrix [p q; r s], det = 1.
struct UniMat {
    long long p = 1, q = 0, r = 0, s = 1;
    auto operator<=>(const UniMat&) const = default;
};

// Q'(x, y) = Q(p x + q y, r x + s y)
Form apply(const Form& f, const UniMat& m);

// Definite (delta < 0, a > 0): |b| <= a <= c with b >= 0 on the boundary.
// Indefinite (delta > 0 nonsquare): 0 < b < sqrt(delta) and
// sqrt(delta) - b < 2|a| < sqrt(delta) + b.
bool is_reduced(const Form& f);

// Gauss reduction (definite) or repeated neighbor steps (indefinite).
Form reduce(const Form& f);

// Right-neighbor step for an indefinite form.
Form rho(const Form& f);

// All reduced forms in the rho-orbit of f, starting from the
// lexicographically least one. Indefinite nonsquare delta only.
std::vector<Form> cycle(const Form& f);

bool equivalent(const Form& f, const Form& g);

// Representatives of all classes of discriminant delta, imprimitive forms
// included. Definite: one positive definite reduced form per class.
// Indefinite: lexicographically least form of each cycle. Sorted.
std::vector<Form> class_list(long long delta);

// Order of the stabilizer modulo +-1: 3 for multiples of x^2 + xy + y^2,
// 2 for multiples of x^2 + y^2, else 1. Positive definite forms.
int w(const Form& f);

// (-b + i sqrt(|delta|)) / (2a), positive definite forms.
std::complex<double> cm_point(const Form& f);

// Genus character: Kronecker symbol (D | r) for any represented value r
// coprime to D; 0 when gcd(a, b, c, D) > 1. Needs D | delta with
// delta / D a discriminant, D fundamental or 1.
int genus_character(const Form& f, long long D);

// Generator of the special stabilizer of an indefinite form: the matrix
// built from the fundamental automorph of its primitive part.
UniMat automorph(const Form& f);

} // namespace phmf::qforms
