#include "hmv/numfield.hpp"

#include <algorithm>
#include <sstream>

#include "hmv/errors.hpp"
#include "hmv/rational.hpp"

namespace hmv {

TotallyRealField make_field(const std::vector<mpz_class>& coeffs, bool assert_irreducible) {
    int d = static_cast<int>(coeffs.size()) - 1;
    if (d < 2) throw degree_too_small("field degree must be at least 2, got " + std::to_string(d));
    if (coeffs[d] != 1) throw bad_input("defining polynomial must be monic");

    bool asserted = false;
    if (irreducibility_decidable(d)) {
        if (!is_irreducible_monic(coeffs))
            throw not_irreducible("defining polynomial factors over Q");
    } else {
        if (!assert_irreducible)
            throw not_irreducible(
                "degree > 6: supply assert_irreducible to vouch for irreducibility");
        asserted = true;
    }

    TotallyRealField f;
    f.poly = coeffs;
    f.degree = d;
    f.irreducibility_asserted = asserted;
    f.disc = poly_discriminant(coeffs);

    QPoly p = f.poly_q();
    auto chain = sturm_chain(p);
    int real_roots = sturm_count_all(chain);
    if (real_roots != d)
        throw not_totally_real("polynomial has " + std::to_string(real_roots) +
                               " real roots, expected " + std::to_string(d));
    f.embeddings = isolate_real_roots(p);
    if (static_cast<int>(f.embeddings.size()) != d)
        throw Error("Internal", "root isolation disagrees with Sturm count");
    return f;
}

RootInterval refine_embedding(const TotallyRealField& field, int index, const mpq_class& width) {
    if (index < 0 || index >= field.degree)
        throw bad_input("embedding index out of range");
    if (width <= 0) throw bad_input("width must be positive");
    return refine_root(field.poly_q(), field.embeddings[index], width);
}

FieldElement elem_from_int(const TotallyRealField& f, long v) {
    FieldElement e(f.degree, 0);
    e[0] = v;
    return e;
}

bool elem_is_zero(const FieldElement& a) {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

FieldElement elem_add(const TotallyRealField& f, const FieldElement& a, const FieldElement& b) {
    FieldElement r(f.degree, 0);
    for (int i = 0; i < f.degree; ++i) r[i] = a[i] + b[i];
    return r;
}

FieldElement elem_sub(const TotallyRealField& f, const FieldElement& a, const FieldElement& b) {
    FieldElement r(f.degree, 0);
    for (int i = 0; i < f.degree; ++i) r[i] = a[i] - b[i];
    return r;
}

FieldElement elem_mul(const TotallyRealField& f, const FieldElement& a, const FieldElement& b) {
    const int r = f.degree;
    std::vector<mpq_class> prod(2 * r - 1, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) prod[i + j] += a[i] * b[j];
    // reduce modulo the monic defining polynomial
    for (int k = 2 * r - 2; k >= r; --k) {
        if (prod[k] == 0) continue;
        mpq_class c = prod[k];
        prod[k] = 0;
        for (int i = 0; i < r; ++i) prod[k - r + i] -= c * f.poly[i];
    }
    return FieldElement(prod.begin(), prod.begin() + r);
}

FieldElement elem_pow(const TotallyRealField& f, FieldElement base, unsigned long e) {
    FieldElement acc = elem_from_int(f, 1);
    while (e > 0) {
        if (e & 1) acc = elem_mul(f, acc, base);
        base = elem_mul(f, base, base);
        e >>= 1;
    }
    return acc;
}

mpq_class norm(const TotallyRealField& field, const FieldElement& elem) {
    // poly is monic, so Res(poly, elem) = prod over roots of elem(root).
    return resultant(field.poly_q(), QPoly(elem.begin(), elem.end()));
}

QPoly char_poly(const TotallyRealField& field, const FieldElement& elem) {
    const int r = field.degree;
    // multiplication-by-elem matrix in the power basis
    std::vector<FieldElement> cols(r);
    FieldElement basis(r, 0);
    for (int j = 0; j < r; ++j) {
        std::fill(basis.begin(), basis.end(), 0);
        basis[j] = 1;
        cols[j] = elem_mul(field, elem, basis);
    }
    // Faddeev-LeVerrier over Q
    std::vector<std::vector<mpq_class>> M(r, std::vector<mpq_class>(r, 0));
    std::vector<std::vector<mpq_class>> A(r, std::vector<mpq_class>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) A[i][j] = cols[j][i];
    QPoly cp(r + 1, 0);
    cp[r] = 1;
    std::vector<std::vector<mpq_class>> Mk(r, std::vector<mpq_class>(r, 0));
    for (int i = 0; i < r; ++i) Mk[i][i] = 1;
    mpq_class c = 1;
    for (int k = 1; k <= r; ++k) {
        // Mk = A * (Mk_prev + c_prev * I)  (first step: Mk = A)
        if (k > 1) {
            for (int i = 0; i < r; ++i) Mk[i][i] += c;
            std::vector<std::vector<mpq_class>> T(r, std::vector<mpq_class>(r, 0));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    mpq_class s = 0;
                    for (int l = 0; l < r; ++l) s += A[i][l] * Mk[l][j];
                    T[i][j] = s;
                }
            Mk = std::move(T);
        } else {
            Mk = A;
        }
        mpq_class tr = 0;
        for (int i = 0; i < r; ++i) tr += Mk[i][i];
        c = -tr / k;
        cp[r - k] = c;
    }
    return cp;
}

bool is_algebraic_integer(const TotallyRealField& field, const FieldElement& elem) {
    for (const auto& c : char_poly(field, elem))
        if (c.get_den() != 1) return false;
    return true;
}

UnitSystem check_units(const TotallyRealField& field,
                       const std::vector<FieldElement>& units,
                       UnitProvenance provenance) {
    const int r = field.degree;
    if (static_cast<int>(units.size()) != r - 1)
        throw wrong_count("expected " + std::to_string(r - 1) + " units, got " +
                          std::to_string(units.size()));
    UnitSystem sys;
    sys.provenance = provenance;
    for (const auto& u : units) {
        if (static_cast<int>(u.size()) != r)
            throw bad_input("unit coordinate vector has wrong length");
        mpq_class n = norm(field, u);
        if (n != 1 && n != -1)
            throw not_a_unit("norm " + format_rational(n) + " of element " + format_element(u));
        if (!is_algebraic_integer(field, u))
            throw not_a_unit("element " + format_element(u) + " is not an algebraic integer");
        sys.units.push_back(u);
        sys.norms.push_back(n == 1 ? 1 : -1);
    }
    return sys;
}

std::string format_element(const FieldElement& e) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << format_rational(e[i]);
    }
    os << "]";
    return os.str();
}

} // namespace hmv
