#include "hmv/plectic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hmv/errors.hpp"
#include "hmv/smith.hpp"

namespace hmv {

namespace {

long mod_norm(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

long mod_inverse(long a, long n) {
    long t = 0, newt = 1, r = n, newr = mod_norm(a, n);
    while (newr != 0) {
        long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw inconsistent_data("element not invertible modulo " + std::to_string(n));
    return mod_norm(t, n);
}

using Matrix = std::vector<std::vector<long>>;

Matrix identity_matrix(int k) {
    Matrix m(k, std::vector<long>(k, 0));
    for (int i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, long n) {
    int k = static_cast<int>(a.size());
    Matrix c(k, std::vector<long>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < k; ++j) c[i][j] = mod_norm(c[i][j] + a[i][l] * b[l][j], n);
        }
    return c;
}

std::vector<long> mat_vec(const Matrix& a, const std::vector<long>& v, long n) {
    int k = static_cast<int>(a.size());
    std::vector<long> out(k, 0);
    for (int i = 0; i < k; ++i) {
        long acc = 0;
        for (int j = 0; j < k; ++j) acc += a[i][j] * v[j];
        out[i] = mod_norm(acc, n);
    }
    return out;
}

long carrier_size_guarded(long modulus, int rank) {
    long size = 1;
    for (int i = 0; i < rank; ++i) {
        if (size > 1000000 / modulus) throw too_large("module carrier exceeds 10^6 elements");
        size *= modulus;
    }
    return size;
}

std::vector<std::pair<long, int>> factor_modulus(long n) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
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

// Elementary divisors of H^1(g, m reduced mod p^e), as ascending powers of p.
std::vector<long> h1_prime_power(const FiniteGroup& g, const GModule& m, long p, int e) {
    long n = 1;
    for (int i = 0; i < e; ++i) n *= p;
    const int k = m.rank;
    const int order = g.order;
    const long ncols = static_cast<long>(order) * k;
    const long nrows = static_cast<long>(order) * order * k;
    if (nrows * ncols > 8000000) throw too_large("cocycle system exceeds the size guard");
    const int N = static_cast<int>(ncols);

    // action matrices reduced mod p^e
    std::vector<Matrix> rho(order);
    for (int a = 0; a < order; ++a) {
        rho[a] = Matrix(k, std::vector<long>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) rho[a][i][j] = mod_norm(m.action[a][i][j], n);
    }

    // cocycle system: one block of k rows per pair (a, b), unknowns f(g)_j
    std::vector<std::vector<long>> s(nrows, std::vector<long>(N, 0));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            int ab = g.mul(a, b);
            for (int t = 0; t < k; ++t) {
                auto& row = s[(static_cast<long>(a) * order + b) * k + t];
                row[ab * k + t] = mod_norm(row[ab * k + t] + 1, n);
                row[a * k + t] = mod_norm(row[a * k + t] - 1, n);
                for (int j = 0; j < k; ++j)
                    row[b * k + j] = mod_norm(row[b * k + j] - rho[a][t][j], n);
            }
        }

    auto val = [&](long x) {
        if (x == 0) return e;
        int v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };

    // column transforms are tracked so kernel generators and coboundary
    // coordinates can be read off after diagonalization
    Matrix v_mat = identity_matrix(N);
    Matrix v_inv = identity_matrix(N);
    std::vector<int> aval(N, e);

    for (int t = 0; t < N; ++t) {
        long best_i = -1, best_j = -1;
        int best_v = e;
        for (long i = t; i < nrows && best_v > 0; ++i)
            for (int j = t; j < N; ++j) {
                if (s[i][j] == 0) continue;
                int w = val(s[i][j]);
                if (w < best_v) {
                    best_v = w;
                    best_i = i;
                    best_j = j;
                    if (w == 0) break;
                }
            }
        if (best_i < 0) break; // trailing block is zero, remaining diag = p^e
        std::swap(s[t], s[best_i]);
        if (best_j != t) {
            for (long i = t; i < nrows; ++i) std::swap(s[i][t], s[i][best_j]);
            for (int r = 0; r < N; ++r) std::swap(v_mat[r][t], v_mat[r][best_j]);
            std::swap(v_inv[t], v_inv[best_j]);
        }
        long pv = 1;
        for (int i = 0; i < best_v; ++i) pv *= p;
        long unit = s[t][t] / pv;
        long uinv = mod_inverse(unit, n);
        for (int j = t; j < N; ++j) s[t][j] = mod_norm(s[t][j] * uinv, n);
        for (long i = t + 1; i < nrows; ++i) {
            if (s[i][t] == 0) continue;
            long c = s[i][t] / pv;
            for (int j = t; j < N; ++j) s[i][j] = mod_norm(s[i][j] - c * s[t][j], n);
        }
        for (int j = t + 1; j < N; ++j) {
            if (s[t][j] == 0) continue;
            long c = s[t][j] / pv;
            s[t][j] = 0; // column t below the pivot is already clear
            for (int r = 0; r < N; ++r)
                v_mat[r][j] = mod_norm(v_mat[r][j] - c * v_mat[r][t], n);
            for (int r = 0; r < N; ++r)
                v_inv[t][r] = mod_norm(v_inv[t][r] + c * v_inv[j][r], n);
        }
        aval[t] = best_v;
    }

    std::vector<int> gens;
    for (int t = 0; t < N; ++t)
        if (aval[t] >= 1) gens.push_back(t);
    if (gens.empty()) return {};

    // presentation of Z^1 / B^1: generator orders plus one relation per
    // coboundary basis vector
    std::vector<std::vector<mpz_class>> pres;
    for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<mpz_class> row(gens.size(), 0);
        long order_t = 1;
        for (int x = 0; x < aval[gens[i]]; ++x) order_t *= p;
        row[i] = order_t;
        pres.push_back(std::move(row));
    }
    for (int j = 0; j < k; ++j) {
        std::vector<long> b(N, 0);
        for (int a = 0; a < order; ++a)
            for (int t = 0; t < k; ++t)
                b[a * k + t] = mod_norm(rho[a][t][j] - (t == j ? 1 : 0), n);
        std::vector<long> y = mat_vec(v_inv, b, n);
        std::vector<mpz_class> row(gens.size(), 0);
        for (int t = 0; t < N; ++t) {
            long mt = 1;
            for (int x = 0; x < e - aval[t]; ++x) mt *= p;
            if (y[t] % mt != 0)
                throw inconsistent_data("coboundary outside the cocycle lattice");
            if (aval[t] >= 1) {
                auto pos = std::lower_bound(gens.begin(), gens.end(), t) - gens.begin();
                row[pos] = y[t] / mt;
            }
        }
        pres.push_back(std::move(row));
    }

    std::vector<long> out;
    for (const auto& d : smith_diagonal(std::move(pres)))
        if (d > 1) out.push_back(d.get_si());
    return out;
}

std::vector<long> combine_prime_parts(std::map<long, std::vector<long>>& by_prime) {
    size_t mx = 0;
    for (auto& [p, list] : by_prime) {
        std::sort(list.begin(), list.end(), std::greater<long>());
        mx = std::max(mx, list.size());
    }
    std::vector<long> out;
    for (size_t i = 0; i < mx; ++i) {
        long d = 1;
        for (const auto& [p, list] : by_prime)
            if (i < list.size()) d *= list[i];
        if (d > 1) out.push_back(d);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<long> decode_carrier(long code, long n, int k) {
    std::vector<long> v(k);
    for (int i = 0; i < k; ++i) {
        v[i] = code % n;
        code /= n;
    }
    return v;
}

long encode_carrier(const std::vector<long>& v, long n) {
    long code = 0;
    for (size_t i = v.size(); i-- > 0;) code = code * n + v[i];
    return code;
}

} // namespace

GModule make_gmodule(const FiniteGroup& g, long modulus, int rank,
                     std::vector<std::vector<std::vector<long>>> action) {
    if (modulus < 2) throw bad_input("module modulus must be >= 2");
    if (rank < 1) throw bad_input("module rank must be >= 1");
    if (static_cast<int>(action.size()) != g.order)
        throw inconsistent_data("one action matrix per group element required");
    for (auto& mat : action) {
        if (static_cast<int>(mat.size()) != rank)
            throw inconsistent_data("action matrix has the wrong shape");
        for (auto& row : mat) {
            if (static_cast<int>(row.size()) != rank)
                throw inconsistent_data("action matrix has the wrong shape");
            for (auto& x : row) x = mod_norm(x, modulus);
        }
    }
    if (action[g.identity] != identity_matrix(rank))
        throw inconsistent_data("identity must act trivially");
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (mat_mul(action[a], action[b], modulus) != action[g.mul(a, b)])
                throw inconsistent_data("module action is not a homomorphism");
    GModule m;
    m.modulus = modulus;
    m.rank = rank;
    m.action = std::move(action);
    return m;
}

GModule trivial_gmodule(const FiniteGroup& g, long modulus, int rank) {
    std::vector<std::vector<std::vector<long>>> action(g.order, identity_matrix(rank));
    return make_gmodule(g, modulus, rank, std::move(action));
}

GModule rank1_gmodule(const FiniteGroup& g, long modulus, std::vector<long> values) {
    if (static_cast<int>(values.size()) != g.order)
        throw inconsistent_data("one value per group element required");
    std::vector<std::vector<std::vector<long>>> action;
    for (long v : values) action.push_back({{mod_norm(v, modulus)}});
    return make_gmodule(g, modulus, 1, std::move(action));
}

std::vector<std::vector<long>> module_invariants(const FiniteGroup& g, const GModule& m) {
    long size = carrier_size_guarded(m.modulus, m.rank);
    std::vector<std::vector<long>> fixed;
    for (long code = 0; code < size; ++code) {
        std::vector<long> v = decode_carrier(code, m.modulus, m.rank);
        bool ok = true;
        for (int a = 0; a < g.order && ok; ++a)
            if (mat_vec(m.action[a], v, m.modulus) != v) ok = false;
        if (ok) fixed.push_back(std::move(v));
    }
    return fixed;
}

int WreathGroup::encode(const std::vector<int>& f, int perm_index) const {
    int code = perm_index;
    for (int i = sigma; i-- > 0;) code = code * base.order + f[i];
    return code;
}

void WreathGroup::decode(int w, std::vector<int>& f, int& perm_index) const {
    f.assign(sigma, 0);
    for (int i = 0; i < sigma; ++i) {
        f[i] = w % base.order;
        w /= base.order;
    }
    perm_index = w;
}

WreathGroup wreath_group(const FiniteGroup& base, int sigma) {
    if (sigma < 1 || sigma > 7) throw bad_input("wreath copies must be between 1 and 7");
    long order = 1;
    for (int i = 0; i < sigma; ++i) order *= base.order;
    for (int i = 2; i <= sigma; ++i) order *= i;
    if (order > 5000) throw too_large("wreath product order " + std::to_string(order) +
                                      " exceeds the realization guard");

    WreathGroup w;
    w.base = base;
    w.sigma = sigma;
    w.perms = symmetric_group_perms(sigma);
    std::map<Perm, int> pidx;
    for (size_t i = 0; i < w.perms.size(); ++i) pidx[w.perms[i]] = static_cast<int>(i);

    int n = static_cast<int>(order);
    std::vector<std::vector<int>> fs(n);
    std::vector<int> ps(n);
    for (int x = 0; x < n; ++x) w.decode(x, fs[x], ps[x]);

    std::vector<int> table(static_cast<size_t>(n) * n);
    std::vector<int> h(sigma);
    for (int x = 0; x < n; ++x) {
        const auto& f1 = fs[x];
        const Perm& p1 = w.perms[ps[x]];
        for (int y = 0; y < n; ++y) {
            const auto& f2 = fs[y];
            const Perm& p2 = w.perms[ps[y]];
            for (int i = 0; i < sigma; ++i) h[i] = base.mul(f1[p2[i]], f2[i]);
            table[static_cast<size_t>(x) * n + y] =
                w.encode(h, pidx.at(perm_compose(p1, p2)));
        }
    }
    w.realized = make_group(std::move(table),
                            base.name + "wr" + std::to_string(sigma));
    return w;
}

std::vector<int> wreath_embedding(const FiniteGroup& q, const std::vector<int>& sub,
                                  const std::vector<int>& transversal,
                                  const WreathGroup& w) {
    if (!is_subgroup(q, sub)) throw not_a_subgroup("embedding requires a subgroup");
    std::vector<int> sorted_sub(sub.begin(), sub.end());
    std::sort(sorted_sub.begin(), sorted_sub.end());
    sorted_sub.erase(std::unique(sorted_sub.begin(), sorted_sub.end()), sorted_sub.end());
    int index = q.order / static_cast<int>(sorted_sub.size());
    if (static_cast<int>(transversal.size()) != index)
        throw bad_transversal("expected " + std::to_string(index) + " coset representatives");
    if (w.sigma != index || w.base.order != static_cast<int>(sorted_sub.size()))
        throw inconsistent_data("wreath group does not match the coset structure");

    std::map<int, int> sub_index;
    for (size_t i = 0; i < sorted_sub.size(); ++i) sub_index[sorted_sub[i]] = static_cast<int>(i);
    std::map<Perm, int> pidx;
    for (size_t i = 0; i < w.perms.size(); ++i) pidx[w.perms[i]] = static_cast<int>(i);

    // every element must land in exactly one coset
    std::vector<int> hits(index, 0);
    for (int a = 0; a < q.order; ++a) {
        int c = coset_of(q, sorted_sub, transversal, a);
        if (c < 0) throw bad_transversal("representatives do not cover the group");
        ++hits[c];
    }
    for (int c : hits)
        if (c != static_cast<int>(sorted_sub.size()))
            throw bad_transversal("coset representatives overlap");

    std::vector<int> image(q.order);
    std::vector<int> f(index);
    for (int a = 0; a < q.order; ++a) {
        Perm pi(index);
        for (int i = 0; i < index; ++i)
            pi[i] = coset_of(q, sorted_sub, transversal, q.mul(a, transversal[i]));
        for (int i = 0; i < index; ++i) {
            int comp = q.mul(q.inv(transversal[pi[i]]), q.mul(a, transversal[i]));
            auto it = sub_index.find(comp);
            if (it == sub_index.end())
                throw bad_transversal("coset component escapes the subgroup");
            f[i] = it->second;
        }
        image[a] = w.encode(f, pidx.at(pi));
    }

    for (int a = 0; a < q.order; ++a)
        for (int b = 0; b < q.order; ++b)
            if (w.realized.mul(image[a], image[b]) != image[q.mul(a, b)])
                throw inconsistent_data("wreath embedding is not a homomorphism");
    std::set<int> distinct(image.begin(), image.end());
    if (static_cast<int>(distinct.size()) != q.order)
        throw inconsistent_data("wreath embedding is not injective");
    return image;
}

GModule coinduced_module(const GModule& m, const WreathGroup& w) {
    const int k = m.rank;
    const int rank = k * w.sigma;
    std::vector<std::vector<std::vector<long>>> action;
    action.reserve(w.realized.order);
    std::vector<int> f;
    int pi_index = 0;
    for (int x = 0; x < w.realized.order; ++x) {
        w.decode(x, f, pi_index);
        const Perm& pi = w.perms[pi_index];
        Perm pinv = perm_inverse(pi);
        Matrix mat(rank, std::vector<long>(rank, 0));
        for (int i = 0; i < w.sigma; ++i) {
            int j = pinv[i];
            const Matrix& block = m.action[f[j]];
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) mat[i * k + r][j * k + c] = block[r][c];
        }
        action.push_back(std::move(mat));
    }
    return make_gmodule(w.realized, m.modulus, rank, std::move(action));
}

GModule restrict_module(const GModule& big, const std::vector<int>& image,
                        const FiniteGroup& small) {
    if (static_cast<int>(image.size()) != small.order)
        throw inconsistent_data("restriction map size mismatch");
    std::vector<std::vector<std::vector<long>>> action;
    for (int a = 0; a < small.order; ++a) action.push_back(big.action[image[a]]);
    return make_gmodule(small, big.modulus, big.rank, std::move(action));
}

std::vector<long> h1(const FiniteGroup& g, const GModule& m) {
    if (static_cast<int>(m.action.size()) != g.order)
        throw inconsistent_data("module is over a different group");
    if (g.order == 1) return {};
    long carrier = carrier_size_guarded(m.modulus, m.rank);
    if (carrier > 1000000 / g.order)
        throw too_large("group times carrier exceeds 10^6");
    std::map<long, std::vector<long>> by_prime;
    for (const auto& [p, e] : factor_modulus(m.modulus))
        by_prime[p] = h1_prime_power(g, m, p, e);
    return combine_prime_parts(by_prime);
}

std::vector<long> h1_cyclic_oracle(const FiniteGroup& g, const GModule& m) {
    if (g.order == 1) return {};
    int gen = -1;
    for (int a = 0; a < g.order && gen < 0; ++a) {
        int x = a, steps = 1;
        while (x != g.identity) {
            x = g.mul(x, a);
            ++steps;
        }
        if (steps == g.order) gen = a;
    }
    if (gen < 0) throw bad_input("cyclic oracle requires a cyclic group");

    const long n = m.modulus;
    const int k = m.rank;
    long size = carrier_size_guarded(n, k);

    const Matrix& sigma = m.action[gen];
    Matrix norm(k, std::vector<long>(k, 0));
    Matrix power = identity_matrix(k);
    for (int i = 0; i < g.order; ++i) {
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) norm[r][c] = mod_norm(norm[r][c] + power[r][c], n);
        power = mat_mul(sigma, power, n);
    }
    Matrix tmat = sigma;
    for (int i = 0; i < k; ++i) tmat[i][i] = mod_norm(tmat[i][i] - 1, n);

    std::vector<std::vector<long>> kernel;
    std::set<long> image;
    for (long code = 0; code < size; ++code) {
        std::vector<long> v = decode_carrier(code, n, k);
        std::vector<long> nv = mat_vec(norm, v, n);
        if (std::all_of(nv.begin(), nv.end(), [](long x) { return x == 0; }))
            kernel.push_back(v);
        image.insert(encode_carrier(mat_vec(tmat, v, n), n));
    }
    const long im_size = static_cast<long>(image.size());

    std::map<long, std::vector<long>> by_prime;
    for (const auto& [p, e] : factor_modulus(n)) {
        (void)e;
        std::vector<int> ge; // ge[j-1] = number of cyclic factors with p-exponent >= j
        long prev = 0, pj = 1;
        for (;;) {
            pj *= p;
            long count = 0;
            std::vector<long> scaled(k);
            for (const auto& v : kernel) {
                for (int i = 0; i < k; ++i) scaled[i] = mod_norm(v[i] * pj, n);
                if (image.count(encode_carrier(scaled, n))) ++count;
            }
            if (count % im_size != 0)
                throw inconsistent_data("oracle annihilator count not a multiple of image size");
            long ann = count / im_size;
            long t = 0;
            while (ann > 1) {
                if (ann % p != 0) throw inconsistent_data("oracle annihilator not a p-power");
                ann /= p;
                ++t;
            }
            if (t == prev) break;
            ge.push_back(static_cast<int>(t - prev));
            prev = t;
        }
        std::vector<long> parts;
        for (int i = 0;; ++i) {
            int exp = 0;
            for (int gcount : ge)
                if (gcount > i) ++exp;
            if (exp == 0) break;
            long d = 1;
            for (int x = 0; x < exp; ++x) d *= p;
            parts.push_back(d);
        }
        by_prime[p] = std::move(parts);
    }
    return combine_prime_parts(by_prime);
}

ShapiroResult shapiro_check(const FiniteGroup& q, const std::vector<int>& sub,
                            const GModule& m) {
    FiniteGroup sub_g = subgroup_group(q, sub);
    if (static_cast<int>(m.action.size()) != sub_g.order)
        throw inconsistent_data("module is not over the given subgroup");
    std::vector<int> transversal = left_transversal(q, sub);
    WreathGroup w = wreath_group(sub_g, static_cast<int>(transversal.size()));
    std::vector<int> emb = wreath_embedding(q, sub, transversal, w);
    GModule induced = restrict_module(coinduced_module(m, w), emb, q);

    ShapiroResult out;
    out.restricted_divisors = h1(q, induced);
    out.subgroup_divisors = h1(sub_g, m);
    out.pass = out.restricted_divisors == out.subgroup_divisors;
    return out;
}

PlecticResult plectic_h1_check(const FiniteGroup& g, int sigma, const GModule& m) {
    if (module_invariants(g, m).size() != 1)
        throw invariants_nonzero("module has nonzero invariants under the base group");
    WreathGroup w = wreath_group(g, sigma);
    GModule coind = coinduced_module(m, w);

    PlecticResult out;
    out.wreath_divisors = h1(w.realized, coind);
    out.base_divisors = h1(g, m);
    out.pass = out.wreath_divisors == out.base_divisors;
    return out;
}

TensorInductionResult tensor_induction_check(const FiniteGroup& q,
                                             const std::vector<int>& sub,
                                             const std::vector<int>& chi, int m) {
    FiniteGroup sub_g = subgroup_group(q, sub);
    if (static_cast<int>(chi.size()) != sub_g.order)
        throw bad_character("one character value per subgroup element required");
    for (int v : chi)
        if (v != 1 && v != -1) throw bad_character("character values must be +1 or -1");
    for (int a = 0; a < sub_g.order; ++a)
        for (int b = 0; b < sub_g.order; ++b)
            if (chi[sub_g.mul(a, b)] != chi[a] * chi[b])
                throw bad_character("character is not multiplicative");

    std::vector<int> transversal = left_transversal(q, sub);
    const int sigma = static_cast<int>(transversal.size());
    if (m < 0 || m > sigma) throw out_of_range("degree must lie between 0 and the index");

    // enumerate m-subsets of the coset positions
    std::vector<unsigned> subsets;
    for (unsigned mask = 0; mask < (1u << sigma); ++mask)
        if (__builtin_popcount(mask) == m) subsets.push_back(mask);
    std::map<unsigned, int> subset_index;
    for (size_t i = 0; i < subsets.size(); ++i) subset_index[subsets[i]] = static_cast<int>(i);

    TensorInductionResult out;
    out.dimension = static_cast<long>(subsets.size());

    // route one: decode the wreath embedding and act on the tensor factors
    WreathGroup w = wreath_group(sub_g, sigma);
    std::vector<int> emb = wreath_embedding(q, sub, transversal, w);
    std::vector<int> f;
    int pi_index = 0;
    for (int a = 0; a < q.order; ++a) {
        w.decode(emb[a], f, pi_index);
        const Perm& pi = w.perms[pi_index];
        long trace = 0;
        for (unsigned mask : subsets) {
            unsigned img = 0;
            long coeff = 1;
            for (int i = 0; i < sigma; ++i)
                if (mask & (1u << i)) {
                    img |= 1u << pi[i];
                    coeff *= chi[f[i]];
                }
            if (img == mask) trace += coeff;
        }
        out.tensor_character.push_back(trace);
    }

    // route two: the induced monomial representation computed directly from
    // coset arithmetic, then its unsigned m-subset power
    std::vector<int> sorted_sub(sub.begin(), sub.end());
    std::sort(sorted_sub.begin(), sorted_sub.end());
    std::map<int, int> sub_pos;
    for (size_t i = 0; i < sorted_sub.size(); ++i) sub_pos[sorted_sub[i]] = static_cast<int>(i);
    for (int a = 0; a < q.order; ++a) {
        std::vector<int> pi(sigma);
        std::vector<long> entry(sigma);
        for (int i = 0; i < sigma; ++i) {
            int moved = q.mul(a, transversal[i]);
            pi[i] = coset_of(q, sorted_sub, transversal, moved);
            int comp = q.mul(q.inv(transversal[pi[i]]), moved);
            entry[i] = chi[sub_pos.at(comp)];
        }
        long trace = 0;
        for (unsigned mask : subsets) {
            unsigned img = 0;
            long coeff = 1;
            for (int i = 0; i < sigma; ++i)
                if (mask & (1u << i)) {
                    img |= 1u << pi[i];
                    coeff *= entry[i];
                }
            if (img == mask) trace += coeff;
        }
        out.subset_character.push_back(trace);
    }

    out.pass = out.tensor_character == out.subset_character;
    return out;
}

namespace {

std::vector<int> cyclic_closure(const FiniteGroup& g, int a) {
    std::vector<int> elems{g.identity};
    int x = a;
    while (x != g.identity) {
        elems.push_back(x);
        x = g.mul(x, a);
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

int element_of_order(const FiniteGroup& g, int target) {
    for (int a = 0; a < g.order; ++a)
        if (static_cast<int>(cyclic_closure(g, a).size()) == target) return a;
    throw bad_input("no element of order " + std::to_string(target));
}

std::vector<long> sign_values(const FiniteGroup& s, int letters) {
    auto perms = symmetric_group_perms(letters);
    std::vector<long> values;
    for (int i = 0; i < s.order; ++i) values.push_back(perm_sign(perms[i]));
    return values;
}

std::string divisor_pair(const std::vector<long>& a, const std::vector<long>& b) {
    return format_divisors(a) + " vs " + format_divisors(b);
}

} // namespace

std::string format_divisors(const std::vector<long>& d) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) os << ' ';
        os << d[i];
    }
    os << ']';
    return os.str();
}

std::vector<FamilyOutcome> run_shapiro_family() {
    struct Instance {
        std::string name;
        FiniteGroup q;
        std::vector<int> sub;
        GModule m;
    };
    std::vector<Instance> instances;
    auto add = [&](std::string name, FiniteGroup q, std::vector<int> sub,
                   std::function<GModule(const FiniteGroup&)> build) {
        FiniteGroup sub_g = subgroup_group(q, sub);
        instances.push_back({std::move(name), std::move(q), std::move(sub), build(sub_g)});
    };

    {
        FiniteGroup c4 = cyclic_group(4);
        std::vector<int> sub = cyclic_closure(c4, 2);
        add("C4/C2 trivial Z2", c4, sub,
            [](const FiniteGroup& h) { return trivial_gmodule(h, 2, 1); });
        add("C4/C2 sign Z3", c4, sub,
            [](const FiniteGroup& h) { return rank1_gmodule(h, 3, {1, -1}); });
        add("C4/C2 sign Z8", c4, sub,
            [](const FiniteGroup& h) { return rank1_gmodule(h, 8, {1, -1}); });
    }
    {
        FiniteGroup c6 = cyclic_group(6);
        add("C6/C3 trivial Z4", c6, cyclic_closure(c6, 2),
            [](const FiniteGroup& h) { return trivial_gmodule(h, 4, 1); });
        add("C6/C2 sign Z3", c6, cyclic_closure(c6, 3),
            [](const FiniteGroup& h) { return rank1_gmodule(h, 3, {1, -1}); });
    }
    {
        FiniteGroup s3 = symmetric_group(3);
        std::vector<int> c2 = cyclic_closure(s3, element_of_order(s3, 2));
        std::vector<int> c3 = cyclic_closure(s3, element_of_order(s3, 3));
        std::vector<int> all(s3.order);
        std::iota(all.begin(), all.end(), 0);
        add("S3/C2 trivial Z2", s3, c2,
            [](const FiniteGroup& h) { return trivial_gmodule(h, 2, 1); });
        add("S3/C2 sign Z3", s3, c2,
            [](const FiniteGroup& h) { return rank1_gmodule(h, 3, {1, -1}); });
        add("S3/C3 trivial Z2", s3, c3,
            [](const FiniteGroup& h) { return trivial_gmodule(h, 2, 1); });
        add("S3/S3 sign Z3", s3, all, [](const FiniteGroup& h) {
            return rank1_gmodule(h, 3, sign_values(h, 3));
        });
    }
    {
        FiniteGroup v4 = group_by_name("C2xC2");
        add("C2xC2/C2 trivial Z2", v4, cyclic_closure(v4, element_of_order(v4, 2)),
            [](const FiniteGroup& h) { return trivial_gmodule(h, 2, 1); });
    }
    {
        FiniteGroup d4 = dihedral_group(4);
        // center: order-2 elements commuting with everything
        std::vector<int> center;
        for (int a = 0; a < d4.order; ++a) {
            bool central = true;
            for (int b = 0; b < d4.order && central; ++b)
                if (d4.mul(a, b) != d4.mul(b, a)) central = false;
            if (central) center.push_back(a);
        }
        add("D4/center trivial Z2", d4, center,
            [](const FiniteGroup& h) { return trivial_gmodule(h, 2, 1); });
    }
    {
        FiniteGroup c8 = cyclic_group(8);
        add("C8/C4 mult-2 Z5", c8, cyclic_closure(c8, 2), [](const FiniteGroup& h) {
            return rank1_gmodule(h, 5, {1, 2, 4, 3});
        });
    }
    {
        FiniteGroup c12 = cyclic_group(12);
        add("C12/C4 trivial Z2", c12, cyclic_closure(c12, 3),
            [](const FiniteGroup& h) { return trivial_gmodule(h, 2, 1); });
    }
    {
        FiniteGroup c2 = cyclic_group(2);
        add("C2/C2 sign Z4", c2, {0, 1},
            [](const FiniteGroup& h) { return rank1_gmodule(h, 4, {1, -1}); });
    }

    std::vector<FamilyOutcome> outcomes;
    for (const auto& inst : instances) {
        ShapiroResult r = shapiro_check(inst.q, inst.sub, inst.m);
        outcomes.push_back({inst.name, r.pass,
                            divisor_pair(r.restricted_divisors, r.subgroup_divisors)});
    }
    return outcomes;
}

std::vector<FamilyOutcome> run_plectic_family() {
    struct Instance {
        std::string name;
        FiniteGroup g;
        int sigma;
        GModule m;
        bool cyclic;
    };
    std::vector<Instance> instances;

    FiniteGroup c2 = cyclic_group(2);
    instances.push_back({"C2 sign Z3 sigma2", c2, 2, rank1_gmodule(c2, 3, {1, -1}), true});
    instances.push_back({"C2 sign Z5 sigma2", c2, 2, rank1_gmodule(c2, 5, {1, -1}), true});
    instances.push_back({"C2 sign Z9 sigma2", c2, 2, rank1_gmodule(c2, 9, {1, -1}), true});
    instances.push_back({"C2 sign Z3 sigma3", c2, 3, rank1_gmodule(c2, 3, {1, -1}), true});
    instances.push_back({"C2 -I Z3^2 sigma2", c2, 2,
                         make_gmodule(c2, 3, 2, {{{1, 0}, {0, 1}}, {{2, 0}, {0, 2}}}),
                         true});

    FiniteGroup c3 = cyclic_group(3);
    instances.push_back({"C3 mult-2 Z7 sigma2", c3, 2, rank1_gmodule(c3, 7, {1, 2, 4}), true});

    FiniteGroup c4 = cyclic_group(4);
    instances.push_back({"C4 mult-2 Z5 sigma2", c4, 2, rank1_gmodule(c4, 5, {1, 2, 4, 3}), true});

    FiniteGroup v4 = group_by_name("C2xC2");
    {
        std::vector<long> vals;
        auto sub = cyclic_closure(v4, element_of_order(v4, 2));
        std::set<int> in_sub(sub.begin(), sub.end());
        for (int a = 0; a < v4.order; ++a) vals.push_back(in_sub.count(a) ? 1 : -1);
        instances.push_back({"C2xC2 character Z3 sigma2", v4, 2,
                             rank1_gmodule(v4, 3, vals), false});
    }

    FiniteGroup s3 = symmetric_group(3);
    instances.push_back({"S3 sign Z3 sigma2", s3, 2,
                         rank1_gmodule(s3, 3, sign_values(s3, 3)), false});

    std::vector<FamilyOutcome> outcomes;
    for (const auto& inst : instances) {
        PlecticResult r = plectic_h1_check(inst.g, inst.sigma, inst.m);
        bool pass = r.pass;
        std::string detail = divisor_pair(r.wreath_divisors, r.base_divisors);
        if (inst.cyclic) {
            std::vector<long> oracle = h1_cyclic_oracle(inst.g, inst.m);
            if (oracle != r.base_divisors) {
                pass = false;
                detail += ", cyclic oracle " + format_divisors(oracle) + " disagrees";
            } else {
                detail += ", cyclic oracle agrees";
            }
        }
        outcomes.push_back({inst.name, pass, detail});
    }
    return outcomes;
}

std::vector<FamilyOutcome> run_tensor_family() {
    struct Instance {
        std::string name;
        FiniteGroup q;
        std::vector<int> sub;
        std::vector<int> chi;
        int m;
    };
    std::vector<Instance> instances;

    {
        FiniteGroup c4 = cyclic_group(4);
        std::vector<int> sub = cyclic_closure(c4, 2);
        for (int m = 0; m <= 2; ++m)
            instances.push_back({"C4/C2 twist m=" + std::to_string(m), c4, sub, {1, -1}, m});
    }
    {
        FiniteGroup s3 = symmetric_group(3);
        std::vector<int> c2 = cyclic_closure(s3, element_of_order(s3, 2));
        for (int m = 1; m <= 3; ++m)
            instances.push_back({"S3/C2 twist m=" + std::to_string(m), s3, c2, {1, -1}, m});
        std::vector<int> c3 = cyclic_closure(s3, element_of_order(s3, 3));
        instances.push_back({"S3/C3 trivial m=1", s3, c3, {1, 1, 1}, 1});
    }
    {
        FiniteGroup c6 = cyclic_group(6);
        instances.push_back({"C6/C3 trivial m=1", c6, cyclic_closure(c6, 2), {1, 1, 1}, 1});
    }
    {
        FiniteGroup v4 = group_by_name("C2xC2");
        instances.push_back({"C2xC2/C2 twist m=1", v4,
                             cyclic_closure(v4, element_of_order(v4, 2)), {1, -1}, 1});
    }
    {
        FiniteGroup d4 = dihedral_group(4);
        std::vector<int> center;
        for (int a = 0; a < d4.order; ++a) {
            bool central = true;
            for (int b = 0; b < d4.order && central; ++b)
                if (d4.mul(a, b) != d4.mul(b, a)) central = false;
            if (central) center.push_back(a);
        }
        instances.push_back({"D4/center twist m=2", d4, center, {1, -1}, 2});
    }

    std::vector<FamilyOutcome> outcomes;
    for (const auto& inst : instances) {
        TensorInductionResult r = tensor_induction_check(inst.q, inst.sub, inst.chi, inst.m);
        std::ostringstream detail;
        detail << "dim " << r.dimension << (r.pass ? ", characters equal" : ", character mismatch");
        outcomes.push_back({inst.name, r.pass, detail.str()});
    }
    return outcomes;
}

} // namespace hmv
