#include "hmv/quadarith.hpp"

#include <map>
#include <set>
#include <sstream>

#include "hmv/errors.hpp"

namespace hmv {

bool is_squarefree(const mpz_class& n) {
    if (n <= 0) return false;
    mpz_class rest = n;
    for (mpz_class p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            rest /= p;
            if (rest % p == 0) return false;
        }
    }
    return true;
}

QuadField make_quadfield(const mpz_class& m) {
    if (m <= 1 || !is_squarefree(m))
        throw invalid_m("m must be a squarefree integer > 1, got " + m.get_str());
    QuadField f;
    f.m = m;
    f.D = (m % 4 == 1) ? m : 4 * m;
    return f;
}

QuadInt quad_mul(const QuadField& f, const QuadInt& x, const QuadInt& y) {
    if (f.one_mod_four()) {
        // omega^2 = omega + (m-1)/4
        mpz_class t = (f.m - 1) / 4;
        return {x.a * y.a + x.b * y.b * t, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    return {x.a * y.a + x.b * y.b * f.m, x.a * y.b + x.b * y.a};
}

QuadInt quad_pow(const QuadField& f, QuadInt x, unsigned long e) {
    QuadInt acc{1, 0};
    while (e > 0) {
        if (e & 1) acc = quad_mul(f, acc, x);
        x = quad_mul(f, x, x);
        e >>= 1;
    }
    return acc;
}

mpz_class quad_norm(const QuadField& f, const QuadInt& x) {
    if (f.one_mod_four()) return x.a * x.a + x.a * x.b - x.b * x.b * (f.m - 1) / 4;
    return x.a * x.a - f.m * x.b * x.b;
}

std::string format_quadint(const QuadField& f, const QuadInt& x) {
    std::ostringstream os;
    if (f.one_mod_four())
        os << x.a << " + " << x.b << "*(1+sqrt(" << f.m << "))/2";
    else
        os << x.a << " + " << x.b << "*sqrt(" << f.m << ")";
    return os.str();
}

FundamentalUnit fundamental_unit(const mpz_class& m) {
    QuadField f = make_quadfield(m);
    // Continued fraction of omega = (P0 + sqrt d)/Q0 with exact (P,Q) state.
    mpz_class d = m;
    mpz_class P = f.one_mod_four() ? 1 : 0;
    mpz_class Q = f.one_mod_four() ? 2 : 1;
    mpz_class sq;
    mpz_sqrt(sq.get_mpz_t(), d.get_mpz_t());

    mpz_class p_prev = 1, q_prev = 0; // convergent numerators/denominators
    mpz_class p_cur, q_cur;
    bool first = true;
    for (int step = 0; step < 100000; ++step) {
        mpz_class a = (P + sq) / Q; // floor, valid since sqrt(d) irrational
        if (Q < 0) a = (P + sq - Q - 1) / Q; // floor for negative Q (defensive; Q>0 here)
        if (first) {
            p_cur = a;
            q_cur = 1;
            first = false;
        } else {
            mpz_class pn = a * p_cur + p_prev;
            mpz_class qn = a * q_cur + q_prev;
            p_prev = p_cur; q_prev = q_cur;
            p_cur = pn; q_cur = qn;
        }
        // Candidate unit from the convergent p/q of omega:
        //   m = 1 mod 4:  u = (p - q) + q*omega   (= p - q*conj(omega))
        //   otherwise:    u = p + q*sqrt(m)
        QuadInt u = f.one_mod_four() ? QuadInt{p_cur - q_cur, q_cur} : QuadInt{p_cur, q_cur};
        mpz_class n = quad_norm(f, u);
        if (n == 1 || n == -1)
            return {u, n == 1 ? 1 : -1};
        // advance CF state
        P = a * Q - P;
        Q = (d - P * P) / Q;
    }
    throw non_termination("continued fraction of omega did not yield a unit");
}

bool is_valid_discriminant(const mpz_class& D) {
    if (D <= 1) return false;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());
    if (s * s == D) return false;
    if (D % 4 == 1) return is_squarefree(D);
    if (D % 4 == 0) {
        mpz_class m = D / 4;
        return is_squarefree(m) && (m % 4 == 2 || m % 4 == 3);
    }
    return false;
}

bool is_reduced_indefinite(const Form& f, const mpz_class& D) {
    // 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, all exact.
    if (f.b <= 0) return false;
    if (f.b * f.b >= D) return false;
    mpz_class ta = 2 * abs(f.a);
    // sqrt(D) < 2|a| + b
    if ((ta + f.b) * (ta + f.b) <= D) return false;
    // 2|a| < sqrt(D) + b, i.e. 2|a| - b < sqrt(D)
    mpz_class t = ta - f.b;
    if (t > 0 && t * t >= D) return false;
    return true;
}

Form reduce_step(const Form& f, const mpz_class& D) {
    // rho(a,b,c) = (c, r, (r^2-D)/(4c)) with r = -b mod 2|c|,
    // sqrt(D) - 2|c| < r < sqrt(D).
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), D.get_mpz_t()); // floor(sqrt D), D non-square
    mpz_class tc = 2 * abs(f.c);
    mpz_class r = ((-f.b) % tc + tc) % tc;
    // largest representative <= floor(sqrt D)
    r += tc * ((s - r) / tc);
    if (r > s) r -= tc;
    while (r + tc <= s) r += tc; // exact window adjustment
    Form g{f.c, r, (r * r - D) / (4 * f.c)};
    return g;
}

std::vector<Form> reduced_primitive_forms(const mpz_class& D) {
    std::vector<Form> out;
    for (mpz_class b = (D % 2 == 0) ? 2 : 1; b * b < D; b += 2) {
        mpz_class n4 = D - b * b;
        if (n4 % 4 != 0) continue;
        mpz_class n = n4 / 4; // = |a*c|, a and c of opposite sign
        for (mpz_class aa = 1; aa * aa <= n; ++aa) {
            if (n % aa != 0) continue;
            mpz_class pairs[2][2] = {{aa, n / aa}, {n / aa, aa}};
            int npairs = (aa == n / aa) ? 1 : 2;
            for (int i = 0; i < npairs; ++i) {
                const mpz_class& av = pairs[i][0];
                const mpz_class& cv = pairs[i][1];
                for (int sa = -1; sa <= 1; sa += 2) {
                    Form f{sa * av, b, -sa * cv};
                    if (!is_reduced_indefinite(f, D)) continue;
                    mpz_class g = gcd(gcd(f.a, f.b), f.c);
                    if (g != 1) continue;
                    out.push_back(f);
                }
            }
        }
    }
    return out;
}

NarrowClassNumber narrow_class_number(const mpz_class& D) {
    if (!is_valid_discriminant(D))
        throw invalid_discriminant("not a real quadratic field discriminant: " + D.get_str());
    std::vector<Form> forms = reduced_primitive_forms(D);
    std::set<Form> remaining(forms.begin(), forms.end());
    FormClass evidence;
    evidence.D = D;
    while (!remaining.empty()) {
        Form start = *remaining.begin();
        std::vector<Form> cycle;
        Form cur = start;
        do {
            if (!remaining.count(cur))
                throw inconsistent_data("reduction step left the reduced-form set");
            remaining.erase(cur);
            cycle.push_back(cur);
            cur = reduce_step(cur, D);
        } while (!(cur == start));
        evidence.cycles.push_back(std::move(cycle));
    }
    return {static_cast<long>(evidence.cycles.size()), std::move(evidence)};
}

long wide_class_number(const mpz_class& m) {
    QuadField f = make_quadfield(m);
    FundamentalUnit u = fundamental_unit(m);
    long hp = narrow_class_number(f.D).h_plus;
    if (u.norm == -1) return hp;
    if (hp % 2 != 0)
        throw inconsistent_data("h+ odd while fundamental unit has norm +1");
    return hp / 2;
}

} // namespace hmv
