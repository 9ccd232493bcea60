#include "hmv/quadirr.hpp"

#include <sstream>
#include <stdexcept>

#include "hmv/errors.hpp"

namespace hmv {

static bool is_square(const mpz_class& n) {
    if (n < 0) return false;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s * s == n;
}

QuadIrr make_quadirr(const mpz_class& p, const mpz_class& q, const mpz_class& d) {
    if (q == 0) throw bad_input("quadratic irrational with q = 0");
    if (d <= 0 || is_square(d)) throw bad_input("radicand must be positive and non-square");
    if ((d - p * p) % q != 0)
        throw bad_input("representation invariant q | d - p^2 violated");
    return {p, q, d};
}

// sign of sqrt(d) - t for rational t (never 0, sqrt(d) irrational)
static int cmp_sqrt(const mpz_class& d, const mpq_class& t) {
    if (t < 0) return 1;
    mpq_class t2 = t * t;
    return (mpq_class(d) > t2) ? 1 : -1;
}

int cmp_rational(const QuadIrr& w, const mpq_class& t) {
    // (p + sqrt d)/q - t has the sign of (sqrt d - (t q - p)) * sign(q)
    mpq_class u = t * mpq_class(w.q) - mpq_class(w.p);
    int s = cmp_sqrt(w.d, u);
    return (w.q > 0) ? s : -s;
}

int cmp_conjugate_rational(const QuadIrr& w, const mpq_class& t) {
    // (p - sqrt d)/q - t has the sign of -(sqrt d + (t q - p)) * sign(q)
    mpq_class u = t * mpq_class(w.q) - mpq_class(w.p);
    int s = cmp_sqrt(w.d, -u); // sign of sqrt d - (-u) = sqrt d + u
    int r = -s;
    return (w.q > 0) ? r : -r;
}

mpz_class floor_quadirr(const QuadIrr& w) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), w.d.get_mpz_t());
    mpz_class f;
    if (w.q > 0) {
        mpz_class num = w.p + s;
        mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), w.q.get_mpz_t());
    } else {
        // (p + sqrt d)/q = -(p + sqrt d)/|q|; value irrational so
        // floor = -(floor((p + s)/|q|) + 1).
        mpz_class aq = -w.q;
        mpz_class num = w.p + s;
        mpz_class g;
        mpz_fdiv_q(g.get_mpz_t(), num.get_mpz_t(), aq.get_mpz_t());
        f = -(g + 1);
    }
    return f;
}

mpz_class ceil_quadirr(const QuadIrr& w) { return floor_quadirr(w) + 1; }

bool is_reduced(const QuadIrr& w) {
    return cmp_rational(w, 1) > 0 && cmp_conjugate_rational(w, 0) > 0 &&
           cmp_conjugate_rational(w, 1) < 0;
}

McfStep mcf_step(const QuadIrr& w) {
    mpz_class b = ceil_quadirr(w);
    mpz_class p2 = b * w.q - w.p;
    mpz_class q2 = (p2 * p2 - w.d) / w.q;
    return {b, make_quadirr(p2, q2, w.d)};
}

QuadIrr moebius(const QuadIrr& w, const mpz_class& a, const mpz_class& b,
                const mpz_class& c, const mpz_class& d2) {
    mpz_class det = a * d2 - b * c;
    if (det != 1 && det != -1)
        throw bad_input("moebius transform must be unimodular");
    mpz_class A = a * w.p + b * w.q;
    mpz_class C = c * w.p + d2 * w.q;
    mpz_class P = A * C - a * c * w.d; // times q, see below
    mpz_class N = C * C - c * c * w.d;
    if (N == 0) throw bad_input("moebius transform with vanishing denominator");
    // value = (P + det*q*sqrt(d)) / N; both P and N are divisible by q.
    mpz_class Pq = P / w.q;
    mpz_class Nq = N / w.q;
    if (det == -1) {
        Pq = -Pq;
        Nq = -Nq;
    }
    return make_quadirr(Pq, Nq, w.d);
}

std::string format_quadirr(const QuadIrr& w) {
    std::ostringstream os;
    os << "(" << w.p << " + sqrt(" << w.d << "))/" << w.q;
    return os.str();
}

} // namespace hmv
