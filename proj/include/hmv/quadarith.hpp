#ifndef HMV_QUADARITH_HPP
#define HMV_QUADARITH_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hmv {

struct QuadField {
    mpz_class m; // squarefree > 1
    mpz_class D; // field discriminant: m if m = 1 mod 4, else 4m
    bool one_mod_four() const { return m % 4 == 1; }
};

QuadField make_quadfield(const mpz_class& m);
bool is_squarefree(const mpz_class& n);

/// a + b*omega with omega = (1+sqrt m)/2 when m = 1 mod 4, else sqrt m.
struct QuadInt {
    mpz_class a;
    mpz_class b;
};

QuadInt quad_mul(const QuadField& f, const QuadInt& x, const QuadInt& y);
QuadInt quad_pow(const QuadField& f, QuadInt x, unsigned long e);
mpz_class quad_norm(const QuadField& f, const QuadInt& x);
std::string format_quadint(const QuadField& f, const QuadInt& x);

struct FundamentalUnit {
    QuadInt u;  // smallest unit > 1 of Z[omega]
    int norm;   // +1 or -1
};

/// Pell-style search along the continued fraction of omega.
FundamentalUnit fundamental_unit(const mpz_class& m);

/// Indefinite binary quadratic form a x^2 + b x y + c y^2.
struct Form {
    mpz_class a, b, c;
    bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const Form& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

struct FormClass {
    mpz_class D;
    std::vector<std::vector<Form>> cycles; // reduced forms grouped by rho-orbit
};

bool is_reduced_indefinite(const Form& f, const mpz_class& D);
Form reduce_step(const Form& f, const mpz_class& D); // rho
std::vector<Form> reduced_primitive_forms(const mpz_class& D);

struct NarrowClassNumber {
    long h_plus;
    FormClass evidence;
};

NarrowClassNumber narrow_class_number(const mpz_class& D);
long wide_class_number(const mpz_class& m);

bool is_valid_discriminant(const mpz_class& D);

} // namespace hmv

#endif
