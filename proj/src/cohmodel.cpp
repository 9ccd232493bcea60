#include "hmv/cohmodel.hpp"

#include <algorithm>

#include "hmv/errors.hpp"

namespace hmv {

std::string SymDim::str() const {
    if (cs == 0) return c0.get_str();
    std::string st = (cs == 1) ? "s" : cs.get_str() + "*s";
    if (c0 == 0) return st;
    return c0.get_str() + "+" + st;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

GaloisDatum make_galois_datum(FiniteGroup group, std::vector<Perm> pi0_action,
                              std::vector<Perm> cusp_action, std::vector<int> eps,
                              std::vector<Perm> sigma_action) {
    GaloisDatum d;
    d.group = std::move(group);
    d.pi0_action = std::move(pi0_action);
    d.cusp_action = std::move(cusp_action);
    d.sigma_action = std::move(sigma_action);
    d.eps = std::move(eps);
    verify_action(d.group, d.pi0_action);
    verify_action(d.group, d.cusp_action);
    if (!d.sigma_action.empty()) verify_action(d.group, d.sigma_action);

    const int nc = d.n_cusps();
    const int np = d.n_pi0();
    if (static_cast<int>(d.eps.size()) != nc)
        throw inconsistent_datum("eps must assign a component to every cusp");
    std::vector<char> hit(np, 0);
    for (int v : d.eps) {
        if (v < 0 || v >= np) throw inconsistent_datum("eps value out of range");
        hit[v] = 1;
    }
    for (char h : hit)
        if (!h) throw inconsistent_datum("eps is not surjective");
    for (int g = 0; g < d.group.order; ++g)
        for (int y = 0; y < nc; ++y)
            if (d.eps[d.cusp_action[g][y]] != d.pi0_action[g][d.eps[y]])
                throw inconsistent_datum("eps is not equivariant");
    return d;
}

GaloisDatum default_galois_datum(int cusps) {
    if (cusps < 1) throw inconsistent_datum("need at least one cusp");
    FiniteGroup triv = trivial_group();
    std::vector<Perm> pi0{perm_identity(1)};
    std::vector<Perm> cusp{perm_identity(cusps)};
    std::vector<int> eps(cusps, 0);
    return make_galois_datum(std::move(triv), std::move(pi0), std::move(cusp), std::move(eps));
}

std::vector<SymDim> boundary_dims(int r, long h_inf) {
    if (r < 2) throw bad_input("r must be >= 2");
    if (h_inf < 0) throw bad_input("negative cusp count");
    std::vector<SymDim> out(2 * r + 1, SymDim(0));
    for (int n = 0; n <= r - 1; ++n) out[n] = SymDim(h_inf * binomial(r - 1, n), 0);
    for (int n = r; n <= 2 * r - 1; ++n)
        out[n] = SymDim(h_inf * binomial(r - 1, 2 * r - 1 - n), 0);
    return out;
}

std::vector<SymDim> interior_dims(int r, long c, const SymDim& s) {
    if (r < 2) throw bad_input("r must be >= 2");
    std::vector<SymDim> out(2 * r + 1, SymDim(0));
    for (int n = 1; n < 2 * r; ++n) {
        if (n == r) {
            out[n] = (r % 2 == 0) ? SymDim(c * binomial(r, r / 2), 0) + s : s;
        } else if (n % 2 == 0) {
            out[n] = SymDim(c * binomial(r, n / 2), 0);
        }
    }
    return out;
}

std::vector<std::vector<int>> eta_basis_labels(int r, int m) {
    std::vector<std::vector<int>> labels;
    std::vector<int> mask(r, 0);
    std::fill(mask.end() - m, mask.end(), 1);
    do {
        std::vector<int> subset;
        for (int i = 0; i < r; ++i)
            if (mask[i]) subset.push_back(i);
        labels.push_back(std::move(subset));
    } while (std::next_permutation(mask.begin(), mask.end()));
    return labels;
}

CohomologyTable assemble_table_params(int r, long c, long h_inf, std::optional<long> s) {
    if (r < 2) throw bad_input("r must be >= 2");
    if (c < 1) throw inconsistent_datum("need at least one component");
    if (h_inf < c)
        throw inconsistent_datum("fewer cusps than components: eps cannot be surjective");
    if (s && *s < 0) throw bad_input("cusp dimension s must be nonnegative");

    SymDim sd = s ? SymDim(*s) : SymDim::s();
    auto bd = boundary_dims(r, h_inf);
    auto in = interior_dims(r, c, sd);

    CohomologyTable t;
    t.r = r;
    t.c = c;
    t.h_inf = h_inf;
    t.s = s;
    t.rows.resize(2 * r + 1);

    for (int n = 0; n <= 2 * r; ++n) {
        TableRow& row = t.rows[n];
        row.n = n;
        row.Hbd = bd[n];
        row.Hint = in[n];

        // boundary pieces
        if (n <= r - 1 && !bd[n].is_zero())
            row.bd_pieces.push_back({PieceKind::BoundaryWedge, n, n, 0, 0, bd[n]});
        else if (n >= r && n <= 2 * r - 1 && !bd[n].is_zero())
            row.bd_pieces.push_back(
                {PieceKind::DualBoundaryWedge, 2 * r - 1 - n, n, 2 * r, -r, bd[n]});

        // interior pieces
        if (n > 0 && n < 2 * r) {
            if (n % 2 == 0 && n != r) {
                if (!in[n].is_zero())
                    row.int_pieces.push_back(
                        {PieceKind::EtaSpan, n / 2, n, n, -n / 2, SymDim(c * binomial(r, n / 2), 0)});
            } else if (n == r) {
                if (r % 2 == 0)
                    row.int_pieces.push_back(
                        {PieceKind::EtaSpan, r / 2, n, r, -r / 2, SymDim(c * binomial(r, r / 2), 0)});
                if (!(sd.is_zero()))
                    row.int_pieces.push_back({PieceKind::Cusp, 0, n, r, 0, sd});
            }
        }
    }

    // assembly along the long exact sequence
    auto& rows = t.rows;
    for (int n = 0; n <= 2 * r; ++n) {
        SymDim hc, h;
        if (n == 0) {
            hc = SymDim(0);
            h = SymDim(c);
        } else if (n == 1) {
            hc = SymDim(h_inf - c);
            h = SymDim(0);
        } else if (n <= r) {
            hc = bd[n - 1] + in[n];
            h = (n < r) ? in[n] : in[n] + bd[n];
        } else if (n <= 2 * r - 2) {
            hc = in[n];
            h = in[n] + bd[n];
        } else if (n == 2 * r - 1) {
            hc = SymDim(0);
            h = SymDim(h_inf - c); // dual of H^1_c
        } else {
            hc = SymDim(c); // dual of H^0
            h = SymDim(0);
        }
        rows[n].Hc = hc;
        rows[n].H = h;
    }
    return t;
}

CohomologyTable assemble_table(int r, const GaloisDatum& galois, std::optional<long> s) {
    return assemble_table_params(r, galois.n_pi0(), galois.n_cusps(), s);
}

std::vector<long> module_descriptor(const GradedPiece& piece, const GaloisDatum& galois, int r) {
    const FiniteGroup& g = galois.group;
    std::vector<long> chi(g.order, 0);
    switch (piece.kind) {
        case PieceKind::EtaSpan: {
            Perm idr = perm_identity(r);
            for (int a = 0; a < g.order; ++a) {
                const Perm& sp = galois.sigma_action.empty() ? idr : galois.sigma_action[a];
                chi[a] = perm_fixed_subsets(sp, piece.param) *
                         perm_fixed_points(galois.pi0_action[a]);
            }
            return chi;
        }
        case PieceKind::BoundaryWedge:
        case PieceKind::DualBoundaryWedge: {
            long mult = binomial(r - 1, piece.param).get_si();
            for (int a = 0; a < g.order; ++a)
                chi[a] = perm_fixed_points(galois.cusp_action[a]) * mult;
            return chi;
        }
        default:
            throw unsupported_descriptor("no character for cusp/zero pieces");
    }
}

} // namespace hmv
