#include "hmv/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace hmv {

int degree(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly derivative(const QPoly& p) {
    QPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return trim(std::move(d));
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (degree(a) < 0 || degree(b) < 0) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

QPoly scale(const QPoly& a, const mpq_class& c) {
    QPoly r = a;
    for (auto& x : r) x *= c;
    return trim(std::move(r));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    int db = degree(b);
    if (db < 0) throw std::logic_error("divmod by zero polynomial");
    QPoly rem = trim(a);
    QPoly quo(std::max<int>(degree(a) - db + 1, 0), 0);
    const mpq_class& lead = b[db];
    while (degree(rem) >= db) {
        int dr = degree(rem);
        mpq_class c = rem[dr] / lead;
        quo[dr - db] = c;
        for (int i = 0; i <= db; ++i) rem[dr - db + i] -= c * b[i];
        rem = trim(std::move(rem));
    }
    return {trim(std::move(quo)), rem};
}

mpq_class resultant(QPoly f, QPoly g) {
    f = trim(std::move(f));
    g = trim(std::move(g));
    int df = degree(f), dg = degree(g);
    if (df < 0 || dg < 0) return 0;
    mpq_class acc = 1;
    // Euclidean resultant recursion, iterative form.
    while (true) {
        df = degree(f);
        dg = degree(g);
        if (dg == 0) {
            mpq_class p = 1;
            for (int i = 0; i < df; ++i) p *= g[0];
            return acc * p;
        }
        QPoly r = divmod(f, g).second;
        int drr = degree(r);
        if (drr < 0) return 0;
        mpq_class lg = g[dg];
        mpq_class p = 1;
        for (int i = 0; i < df - drr; ++i) p *= lg;
        if ((static_cast<long>(df) * dg) % 2 == 1) p = -p;
        acc *= p;
        f = std::move(g);
        g = std::move(r);
    }
}

std::vector<QPoly> sturm_chain(const QPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(trim(f));
    chain.push_back(derivative(f));
    while (degree(chain.back()) > 0) {
        QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (degree(r) < 0) break;
        chain.push_back(scale(r, -1));
    }
    return chain;
}

static int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

static int variations_at(const std::vector<QPoly>& chain, const mpq_class& x) {
    std::vector<int> s;
    for (const auto& p : chain) s.push_back(sgn(eval(p, x)));
    return sign_variations(s);
}

static int variations_at_inf(const std::vector<QPoly>& chain, int dir) {
    std::vector<int> s;
    for (const auto& p : chain) {
        int d = degree(p);
        if (d < 0) { s.push_back(0); continue; }
        int lead = sgn(p[d]);
        s.push_back((dir > 0 || d % 2 == 0) ? lead : -lead);
    }
    return sign_variations(s);
}

int sturm_count(const std::vector<QPoly>& chain, const mpq_class& a, const mpq_class& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

int sturm_count_all(const std::vector<QPoly>& chain) {
    return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

// A rational point in (lo, hi) where f does not vanish. Only finitely many
// candidates can be roots, so a couple of offsets always suffice.
static mpq_class non_root_point(const QPoly& f, const mpq_class& lo, const mpq_class& hi) {
    static const std::pair<int, int> offsets[] = {{1, 2}, {1, 3}, {2, 5}, {3, 7}, {4, 9}};
    for (auto [n, d] : offsets) {
        mpq_class m = lo + (hi - lo) * n / d;
        if (eval(f, m) != 0) return m;
    }
    throw std::logic_error("non_root_point: exhausted candidates");
}

std::vector<RootInterval> isolate_real_roots(const QPoly& f) {
    QPoly p = trim(f);
    int d = degree(p);
    if (d <= 0) return {};
    auto chain = sturm_chain(p);
    // Cauchy bound on root magnitude.
    mpq_class bound = 0;
    for (int i = 0; i < d; ++i) {
        mpq_class a = abs(p[i] / p[d]);
        if (a > bound) bound = a;
    }
    bound += 1;
    mpq_class lo = -bound, hi = bound;
    if (eval(p, lo) == 0) lo -= 1;
    if (eval(p, hi) == 0) hi += 1;

    std::vector<RootInterval> out;
    // Depth-first bisection; intervals come out sorted.
    struct Seg { mpq_class lo, hi; int count; };
    std::vector<Seg> stack{{lo, hi, sturm_count(chain, lo, hi)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        mpq_class m = non_root_point(p, s.lo, s.hi);
        int left = sturm_count(chain, s.lo, m);
        stack.push_back({m, s.hi, s.count - left});
        stack.push_back({s.lo, m, left});
    }
    // stack order above emits ascending already; keep it explicit.
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

RootInterval refine_root(const QPoly& f, RootInterval iv, const mpq_class& width) {
    int slo = sgn(eval(f, iv.lo));
    int shi = sgn(eval(f, iv.hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::logic_error("refine_root: interval lacks a sign change");
    while (iv.hi - iv.lo > width) {
        mpq_class m = non_root_point(f, iv.lo, iv.hi);
        if (sgn(eval(f, m)) == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

bool irreducibility_decidable(int deg) { return deg <= 6; }

static bool divides_exactly(const QPoly& f, const QPoly& g) {
    return degree(divmod(f, g).second) < 0;
}

static std::vector<mpz_class> divisors_signed(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(-d);
            if (d * d != a) {
                out.push_back(a / d);
                out.push_back(-(a / d));
            }
        }
    }
    return out;
}

bool is_irreducible_monic(const std::vector<mpz_class>& coeffs) {
    int d = static_cast<int>(coeffs.size()) - 1;
    if (d < 1) return false;
    if (coeffs[d] != 1) throw std::logic_error("is_irreducible_monic: not monic");
    if (d == 1) return true;
    if (coeffs[0] == 0) return false; // x divides
    if (!irreducibility_decidable(d))
        throw std::logic_error("irreducibility test supported only for degree <= 6");

    QPoly f(coeffs.begin(), coeffs.end());
    // Rational roots of a monic integer polynomial are integer divisors of
    // the constant term.
    for (const auto& t : divisors_signed(coeffs[0]))
        if (eval(f, mpq_class(t)) == 0) return false;
    if (d <= 3) return true;

    // Monic integer factors: constant coefficient divides coeffs[0], the
    // rest bounded by a crude Mignotte-style estimate.
    mpz_class norm2 = 0;
    for (const auto& c : coeffs) norm2 += c * c;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    for (int k = 2; k <= d / 2; ++k) {
        mpz_class bound = (root + 1) * (mpz_class(1) << k);
        auto consts = divisors_signed(coeffs[0]);
        if (k == 2) {
            for (const auto& b0 : consts)
                for (mpz_class b1 = -bound; b1 <= bound; ++b1) {
                    QPoly g{mpq_class(b0), mpq_class(b1), 1};
                    if (divides_exactly(f, g)) return false;
                }
        } else if (k == 3) {
            for (const auto& b0 : consts)
                for (mpz_class b1 = -bound; b1 <= bound; ++b1)
                    for (mpz_class b2 = -bound; b2 <= bound; ++b2) {
                        QPoly g{mpq_class(b0), mpq_class(b1), mpq_class(b2), 1};
                        if (divides_exactly(f, g)) return false;
                    }
        }
    }
    return true;
}

mpz_class poly_discriminant(const std::vector<mpz_class>& coeffs) {
    int d = static_cast<int>(coeffs.size()) - 1;
    QPoly f(coeffs.begin(), coeffs.end());
    mpq_class res = resultant(f, derivative(f));
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1) res = -res;
    res /= f[d]; // monic in practice, kept for generality
    assert(res.get_den() == 1);
    return res.get_num();
}

} // namespace hmv
