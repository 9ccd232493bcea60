#include "hmv/lift_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "hmv/errors.hpp"

namespace hmv {

LiftAlgebra::LiftAlgebra(int r, int n_boundary) : r_(r), nb_(n_boundary) {
    if (r < 1 || n_boundary < 1) throw bad_input("lift algebra needs r >= 1, B >= 1");
}

bool LiftAlgebra::monomial_dies(const GenMonomial& m) const {
    if (m.size() < 2) return false;
    for (int g : m)
        if (is_boundary(g)) return true; // contains b * (anything of degree 2)
    return false;
}

LiftAlgebra::Element LiftAlgebra::x(int tau) const {
    return {{GenMonomial{tau}, CoefPoly{{CoefMonomial{}, mpq_class(1)}}}};
}

LiftAlgebra::Element LiftAlgebra::b(int i) const {
    return {{GenMonomial{r_ + i}, CoefPoly{{CoefMonomial{}, mpq_class(1)}}}};
}

LiftAlgebra::Element LiftAlgebra::lift(int tau) const {
    Element e = x(tau);
    for (int i = 0; i < nb_; ++i)
        e[GenMonomial{r_ + i}][CoefMonomial{cvar(tau, i)}] = 1;
    return e;
}

static void add_coefpoly(LiftAlgebra::CoefPoly& dst, const LiftAlgebra::CoefPoly& src) {
    for (const auto& [mono, c] : src) {
        auto& v = dst[mono];
        v += c;
        if (v == 0) dst.erase(mono);
    }
}

LiftAlgebra::Element LiftAlgebra::add(const Element& a, const Element& b) const {
    Element r = a;
    for (const auto& [mono, poly] : b) {
        add_coefpoly(r[mono], poly);
        if (r[mono].empty()) r.erase(mono);
    }
    return r;
}

LiftAlgebra::Element LiftAlgebra::mul(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [ma, pa] : a)
        for (const auto& [mb, pb] : b) {
            GenMonomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            if (monomial_dies(m)) continue;
            CoefPoly prod;
            for (const auto& [ca, qa] : pa)
                for (const auto& [cb, qb] : pb) {
                    CoefMonomial cm;
                    cm.reserve(ca.size() + cb.size());
                    std::merge(ca.begin(), ca.end(), cb.begin(), cb.end(),
                               std::back_inserter(cm));
                    prod[cm] += qa * qb;
                }
            add_coefpoly(out[m], prod);
            if (out[m].empty()) out.erase(m);
        }
    return out;
}

LiftAlgebra::Element LiftAlgebra::reduce(const Element& e, bool reverse_order) const {
    // the relations only kill whole monomials, so reduction is a filter;
    // processing order must not matter, and callers cross-check both.
    std::vector<const Element::value_type*> items;
    for (const auto& kv : e) items.push_back(&kv);
    if (reverse_order) std::reverse(items.begin(), items.end());
    Element out;
    for (const auto* kv : items)
        if (!monomial_dies(kv->first) && !kv->second.empty()) out[kv->first] = kv->second;
    return out;
}

bool LiftAlgebra::is_zero(const Element& e) { return e.empty(); }

std::string LiftAlgebra::str(const Element& e) const {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, poly] : e) {
        if (!first) os << " + ";
        first = false;
        os << "(";
        bool f2 = true;
        for (const auto& [cm, q] : poly) {
            if (!f2) os << " + ";
            f2 = false;
            os << q;
            for (int v : cm) os << "*c" << v;
        }
        os << ")";
        for (int g : mono)
            os << (is_boundary(g) ? "*b" : "*x") << (is_boundary(g) ? g - r_ : g);
    }
    return os.str();
}

LiftCheckTrace lift_independence_check(int r, int m) {
    if (!(1 < m && 2 * m <= r))
        throw out_of_range("need 1 < m <= r/2, got r=" + std::to_string(r) +
                           ", m=" + std::to_string(m));
    LiftAlgebra alg(r, r - 1 > 0 ? r - 1 : 1);
    LiftCheckTrace trace;
    trace.r = r;
    trace.m = m;
    trace.pass = true;

    std::vector<LiftAlgebra::Element> lifts;
    for (int tau = 0; tau < r; ++tau) lifts.push_back(alg.lift(tau));

    std::vector<LiftAlgebra::GenMonomial> seen_targets;
    std::vector<int> mask(r, 0);
    std::fill(mask.end() - m, mask.end(), 1);
    do {
        std::vector<int> subset;
        for (int i = 0; i < r; ++i)
            if (mask[i]) subset.push_back(i);

        // product in two association orders; reduction happens inside mul
        LiftAlgebra::Element left = lifts[subset[0]];
        for (size_t k = 1; k < subset.size(); ++k) left = alg.mul(left, lifts[subset[k]]);
        LiftAlgebra::Element right = lifts[subset.back()];
        for (size_t k = subset.size() - 1; k-- > 0;) right = alg.mul(lifts[subset[k]], right);
        LiftAlgebra::Element l1 = alg.reduce(left, false);
        LiftAlgebra::Element l2 = alg.reduce(right, true);

        LiftAlgebra::Element expected;
        expected[subset] = {{LiftAlgebra::CoefMonomial{}, mpq_class(1)}};

        bool ok = (l1 == expected) && (l2 == expected);
        if (ok) {
            // monomial distinctness across subsets
            for (const auto& t : seen_targets)
                if (t == subset) ok = false;
            seen_targets.push_back(subset);
        }
        std::ostringstream os;
        os << "I={";
        for (size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
        os << "}: normal form " << alg.str(l1) << (ok ? " == x_I" : " != x_I");
        trace.lines.push_back(os.str());
        trace.pass = trace.pass && ok;
        ++trace.products_checked;
    } while (std::next_permutation(mask.begin(), mask.end()));
    return trace;
}

SplittingReport splitting_report(int r) {
    if (r < 2) throw bad_input("r must be >= 2");
    SplittingReport rep;
    rep.r = r;
    rep.uniqueness_reason = "boundary part pure of weight 0: at most one splitting";
    if (r == 2) {
        rep.quadratic_remark = true;
        rep.nonsplit = {2};
        return rep;
    }
    for (int n = 3; n <= r; ++n) rep.split_compact.push_back(n);
    for (int n = r; n < 2 * r - 2; ++n) rep.split_ordinary.push_back(n);
    rep.nonsplit = {2, 2 * r - 2};
    return rep;
}

} // namespace hmv
