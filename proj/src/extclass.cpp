#include "hmv/extclass.hpp"

#include <cstdlib>

#include "hmv/errors.hpp"

namespace hmv {

long max_precision_bits() {
    if (const char* env = std::getenv("PLECTIC_MAX_BITS")) {
        long v = std::atol(env);
        if (v >= 128) return v;
    }
    return 32768;
}

static std::vector<Interval> minors_of(const std::vector<std::vector<Interval>>& m) {
    const size_t rows = m.size();
    const size_t cols = rows + 1;
    std::vector<Interval> out;
    for (size_t skip = 0; skip < cols; ++skip) {
        std::vector<std::vector<Interval>> sq(rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                if (j != skip) sq[i].push_back(m[i][j]);
        out.push_back(interval_det(sq));
    }
    return out;
}

RegulatorMatrix hodge_regulator_matrix(const TotallyRealField& field,
                                       const UnitSystem& units,
                                       double target_margin, long start_bits) {
    const int r = field.degree;
    const long cap = max_precision_bits();
    if (target_margin <= 0) throw bad_input("target_margin must be positive");
    if (static_cast<int>(units.units.size()) != r - 1)
        throw wrong_count("regulator matrix needs r-1 units");

    for (long bits = start_bits; bits <= cap; bits *= 2) {
        // root interval width tied to the working precision
        mpq_class width(1);
        width >>= static_cast<unsigned long>(bits / 2);

        RegulatorMatrix mat;
        mat.precision_bits = bits;
        mat.entries.assign(r - 1, {});
        bool usable = true;
        for (int j = 0; j < r - 1 && usable; ++j) {
            for (int i = 0; i < r; ++i) {
                RootInterval root = refine_embedding(field, i, width);
                Interval x = Interval::from_endpoints(root.lo, root.hi, bits);
                Interval val = eval_poly_interval(
                    QPoly(units.units[j].begin(), units.units[j].end()), x, bits);
                if (!val.excludes_zero()) { usable = false; break; }
                mat.entries[j].push_back(val.log_abs());
            }
        }
        if (!usable) continue;

        // row sums must contain 0 (|N(eps)| = 1)
        for (int j = 0; j < r - 1; ++j) {
            Interval sum = mat.entries[j][0];
            for (int i = 1; i < r; ++i) sum = sum + mat.entries[j][i];
            if (!sum.contains_zero())
                throw inconsistent_data("certified row sum of unit logs misses 0");
        }

        auto minors = minors_of(mat.entries);
        // minor consistency: |minors| must pairwise overlap
        bool consistent = true;
        for (size_t a = 0; a < minors.size() && consistent; ++a)
            for (size_t b = a + 1; b < minors.size(); ++b)
                if (!minors[a].abs().overlaps(minors[b].abs())) { consistent = false; break; }
        if (!consistent)
            throw inconsistent_data("maximal minors disagree beyond interval overlap");

        // rank certificate with margin, decided on the last-column minor
        if (minors.back().abs().lo_double() >= target_margin) return mat;
    }
    throw precision_exhausted("rank certificate undecided at " + std::to_string(cap) +
                              " bits");
}

std::vector<Interval> maximal_minors(const RegulatorMatrix& matrix) {
    return minors_of(matrix.entries);
}

Interval regulator(const RegulatorMatrix& matrix) {
    Interval det = minors_of(matrix.entries).back();
    Interval a = det.abs();
    if (!(a.lo_double() > 0))
        throw inconsistent_data("regulator interval does not exclude 0");
    return a;
}

ExtensionClassResult extension_class(const TotallyRealField& field,
                                     const UnitSystem& units,
                                     const GaloisDatum& galois,
                                     double target_margin, long start_bits) {
    ExtensionClassResult res;
    res.cls.sign_convention = +1;
    res.cls.kummer_part = units.units;
    const int nc = galois.n_cusps();
    const int np = galois.n_pi0();
    res.cls.eps_matrix.assign(nc, std::vector<int>(np, 0));
    for (int y = 0; y < nc; ++y) res.cls.eps_matrix[y][galois.eps[y]] = 1;

    res.verdict.quadratic_remark = (field.degree == 2);
    res.verdict.eps_nonzero = true; // eps is surjective by construction
    try {
        res.matrix = hodge_regulator_matrix(field, units, target_margin, start_bits);
        Interval reg = regulator(res.matrix);
        res.verdict.status = "nontrivial";
        res.verdict.regulator_lower = reg.lo_double();
        res.verdict.precision_bits = res.matrix.precision_bits;
    } catch (const Error& e) {
        if (e.code() != "PrecisionExhausted") throw;
        res.verdict.status = "indeterminate";
    }
    return res;
}

} // namespace hmv
