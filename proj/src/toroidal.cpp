#include "hmv/toroidal.hpp"

#include <algorithm>

#include "hmv/errors.hpp"

namespace hmv {

namespace {
constexpr int kMaxSteps = 10000;
}

QuadIrr reduce_seed(QuadIrr w) {
    for (int i = 0; i < kMaxSteps; ++i) {
        if (is_reduced(w)) return w;
        w = mcf_step(w).next;
    }
    throw non_termination("reduction loop exceeded step guard");
}

CuspCycle cusp_cycle_from_seed(const QuadField& field, const QuadIrr& seed) {
    QuadIrr w0 = reduce_seed(seed);
    std::vector<mpz_class> bs;
    std::vector<QuadIrr> ws;
    QuadIrr w = w0;
    for (int i = 0; i < kMaxSteps; ++i) {
        ws.push_back(w);
        McfStep st = mcf_step(w);
        bs.push_back(st.b);
        w = st.next;
        if (w == w0) break;
        if (i + 1 == kMaxSteps)
            throw non_termination("minus continued fraction did not become periodic");
    }
    // canonical rotation: lexicographically smallest
    size_t t = bs.size();
    size_t best = 0;
    for (size_t r = 1; r < t; ++r) {
        for (size_t k = 0; k < t; ++k) {
            int c = cmp(bs[(r + k) % t], bs[(best + k) % t]);
            if (c < 0) { best = r; break; }
            if (c > 0) break;
        }
    }
    CuspCycle cyc;
    cyc.D = field.D;
    cyc.seed = ws[best];
    cyc.b.reserve(t);
    for (size_t k = 0; k < t; ++k) cyc.b.push_back(bs[(best + k) % t]);

    for (size_t k = 0; k < t; ++k)
        if (cyc.b[k] < 2) throw inconsistent_data("minus-CF digit below 2");
    bool has_big = false;
    for (const auto& bk : cyc.b)
        if (bk >= 3) has_big = true;
    if (!has_big) throw inconsistent_data("all-2 cycle cannot arise from a field");
    return cyc;
}

CuspCycle cusp_cycle(const QuadField& field) {
    QuadIrr seed = field.one_mod_four() ? make_quadirr(1, 2, field.m)
                                        : make_quadirr(0, 1, field.m);
    return cusp_cycle_from_seed(field, seed);
}

PeriodMatrix period_matrix(const CuspCycle& cycle) {
    if (cycle.b.empty()) throw bad_input("empty cycle");
    PeriodMatrix pm;
    pm.M = {{{1, 0}, {0, 1}}};
    for (const auto& bk : cycle.b) {
        // M *= [[b,-1],[1,0]]
        std::array<std::array<mpz_class, 2>, 2> n;
        n[0][0] = pm.M[0][0] * bk + pm.M[0][1];
        n[0][1] = -pm.M[0][0];
        n[1][0] = pm.M[1][0] * bk + pm.M[1][1];
        n[1][1] = -pm.M[1][0];
        pm.M = std::move(n);
    }
    mpz_class det = pm.M[0][0] * pm.M[1][1] - pm.M[0][1] * pm.M[1][0];
    if (det != 1) throw inconsistent_data("period matrix determinant is not 1");
    // the period map must fix its seed exactly
    QuadIrr image = moebius(cycle.seed, pm.M[0][0], pm.M[0][1], pm.M[1][0], pm.M[1][1]);
    if (!(image == cycle.seed))
        throw inconsistent_data("period matrix does not fix the cycle seed");
    pm.trace = pm.M[0][0] + pm.M[1][1];
    mpz_class t2 = pm.trace * pm.trace - 4;
    if (t2 <= 0 || t2 % cycle.D != 0)
        throw inconsistent_data("trace^2 - 4 is not D * s^2");
    mpz_class s2 = t2 / cycle.D;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), s2.get_mpz_t());
    if (s * s != s2) throw inconsistent_data("trace^2 - 4 is not D * s^2");
    pm.s = s;
    return pm;
}

QuadInt period_eigenvalue(const QuadField& field, const PeriodMatrix& pm) {
    // (trace + s*sqrt(D))/2 rewritten in the omega basis of Z[omega]
    if (field.one_mod_four()) {
        // D = m, omega = (1+sqrt m)/2: lambda = (tr - s)/2 + s*omega
        if ((pm.trace - pm.s) % 2 != 0)
            throw inconsistent_data("eigenvalue not integral in Z[omega]");
        return {(pm.trace - pm.s) / 2, pm.s};
    }
    // D = 4m, sqrt(D) = 2 sqrt(m): lambda = tr/2 + s*sqrt(m)
    if (pm.trace % 2 != 0) throw inconsistent_data("odd trace with even discriminant");
    return {pm.trace / 2, pm.s};
}

long eigenvalue_unit_power(const QuadField& field, const PeriodMatrix& pm) {
    QuadInt lambda = period_eigenvalue(field, pm);
    FundamentalUnit fu = fundamental_unit(field.m);
    QuadInt pow{1, 0};
    for (long k = 1; k <= 256; ++k) {
        pow = quad_mul(field, pow, fu.u);
        if (pow.a == lambda.a && pow.b == lambda.b) return k;
    }
    throw inconsistent_data("eigenvalue is not a small power of the fundamental unit");
}

static mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntersectionMatrix intersection_matrix(const CuspCycle& cycle) {
    const size_t t = cycle.b.size();
    if (t < 2) throw too_short("intersection matrix needs a cycle of length >= 2");
    IntersectionMatrix im;
    im.entries.assign(t, std::vector<mpz_class>(t, 0));
    for (size_t i = 0; i < t; ++i) im.entries[i][i] = -cycle.b[i];
    if (t == 2) {
        // the two curves meet twice
        im.entries[0][1] = 2;
        im.entries[1][0] = 2;
    } else {
        for (size_t i = 0; i < t; ++i) {
            im.entries[i][(i + 1) % t] = 1;
            im.entries[(i + 1) % t][i] = 1;
        }
    }
    im.negative_definite = true;
    for (size_t k = 1; k <= t; ++k) {
        std::vector<std::vector<mpz_class>> lead(k, std::vector<mpz_class>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead[i][j] = im.entries[i][j];
        mpz_class det = bareiss_det(std::move(lead));
        bool ok = (k % 2 == 0) ? det > 0 : det < 0;
        if (!ok) im.negative_definite = false;
    }
    return im;
}

static long q_rank(std::vector<std::vector<mpq_class>> a) {
    long rank = 0;
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t piv = pr;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[pr], a[piv]);
        for (size_t i = pr + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[pr][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[pr][j];
        }
        ++pr;
        ++rank;
    }
    return rank;
}

NerveRanks nerve_truncated(long length) {
    if (length < 1) throw bad_input("truncated nerve needs length >= 1");
    // path graph: vertices 0..length-1, edges (i, i+1)
    long V = length, E = length - 1;
    std::vector<std::vector<mpq_class>> d1(V, std::vector<mpq_class>(std::max(E, 1L), 0));
    for (long e = 0; e < E; ++e) {
        d1[e][e] = -1;
        d1[e + 1][e] = 1;
    }
    long rank = E > 0 ? q_rank(d1) : 0;
    return {V - rank, E - rank};
}

NerveRanks nerve_quotient(const CuspCycle& cycle) {
    // CW structure: t vertices, t edges, edge i from v_i to v_{i+1 mod t}.
    // t = 1 is a single loop cell, t = 2 a doubled edge.
    long t = static_cast<long>(cycle.b.size());
    std::vector<std::vector<mpq_class>> d1(t, std::vector<mpq_class>(t, 0));
    for (long e = 0; e < t; ++e) {
        d1[(e + 1) % t][e] += 1;
        d1[e][e] += -1;
    }
    long rank = q_rank(d1);
    return {t - rank, t - rank};
}

Pic0Rank pic0_rank(const QuadField& field, const CuspCycle& cycle) {
    PeriodMatrix pm = period_matrix(cycle);
    return {1, eigenvalue_unit_power(field, pm)};
}

Pic0Rank pic0_rank_generic(int r) {
    if (r < 2) throw bad_input("field degree must be >= 2");
    return {r - 1, 0};
}

} // namespace hmv
