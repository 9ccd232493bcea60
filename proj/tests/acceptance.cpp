// End-to-end acceptance checks; each criterion prints one pass/fail line.
// argv[1] is the CLI binary path (used by the determinism check).
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "hmv/cohmodel.hpp"
#include "hmv/errors.hpp"
#include "hmv/extclass.hpp"
#include "hmv/lift_algebra.hpp"
#include "hmv/numfield.hpp"
#include "hmv/plectic.hpp"
#include "hmv/quadarith.hpp"
#include "hmv/quadirr.hpp"
#include "hmv/toroidal.hpp"

using namespace hmv;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct FieldCase {
    std::string name;
    TotallyRealField field;
    UnitSystem units;
};

FieldElement quad_unit_coords(long m) {
    QuadField qf = make_quadfield(m);
    FundamentalUnit fu = fundamental_unit(m);
    if (qf.one_mod_four())
        return {mpq_class(fu.u.a) + mpq_class(fu.u.b, 2), mpq_class(fu.u.b, 2)};
    return {mpq_class(fu.u.a), mpq_class(fu.u.b)};
}

std::vector<FieldCase> test_fields() {
    std::vector<FieldCase> cases;
    for (long m : {2L, 3L, 5L, 10L}) {
        TotallyRealField f = make_field({-mpz_class(m), 0, 1});
        UnitSystem u = check_units(f, {quad_unit_coords(m)}, UnitProvenance::computed);
        cases.push_back({"Q(sqrt " + std::to_string(m) + ")", f, u});
    }
    TotallyRealField cubic = make_field({1, -2, -1, 1});
    UnitSystem cu = check_units(cubic, {{0, 1, 0}, {-1, 1, 0}});
    cases.push_back({"cubic x^3-x^2-2x+1", cubic, cu});
    return cases;
}

bool encloses(const Interval& iv, double v) {
    return iv.lo_double() <= v && v <= iv.hi_double();
}

// --- criterion 1: certified regulator rank certificates ---------------------
bool regulator_certificates(std::string& note) {
    for (const auto& fc : test_fields()) {
        Clock::time_point t0 = Clock::now();
        RegulatorMatrix rm = hodge_regulator_matrix(fc.field, fc.units);
        Interval reg = regulator(rm);
        double elapsed = seconds_since(t0);
        if (elapsed >= 1.0) {
            note = fc.name + " took " + std::to_string(elapsed) + "s";
            return false;
        }
        if (reg.lo_double() < 1e-6) {
            note = fc.name + " margin too small";
            return false;
        }
        for (const auto& row : rm.entries) {
            Interval s = row[0];
            for (size_t i = 1; i < row.size(); ++i) s = s + row[i];
            if (!s.contains_zero()) {
                note = fc.name + " row sum excludes 0";
                return false;
            }
        }
        std::vector<Interval> minors = maximal_minors(rm);
        for (size_t i = 0; i < minors.size(); ++i)
            for (size_t j = i + 1; j < minors.size(); ++j)
                if (!minors[i].abs().overlaps(minors[j].abs())) {
                    note = fc.name + " maximal minors disagree";
                    return false;
                }
        // doubled starting precision must refine, not contradict
        RegulatorMatrix rm2 = hodge_regulator_matrix(fc.field, fc.units, 1e-6, 256);
        if (!regulator(rm2).overlaps(reg)) {
            note = fc.name + " precision escalation inconsistent";
            return false;
        }
    }
    TotallyRealField f5 = make_field({-5, 0, 1});
    UnitSystem u5 = check_units(f5, {quad_unit_coords(5)});
    if (!encloses(regulator(hodge_regulator_matrix(f5, u5)), 0.4812118250596034)) {
        note = "Q(sqrt 5) anchor missed";
        return false;
    }
    TotallyRealField f2 = make_field({-2, 0, 1});
    UnitSystem u2 = check_units(f2, {quad_unit_coords(2)});
    if (!encloses(regulator(hodge_regulator_matrix(f2, u2)), 0.8813735870195430)) {
        note = "Q(sqrt 2) anchor missed";
        return false;
    }
    return true;
}

// --- criterion 2: extension class verdicts ----------------------------------
bool extension_verdicts(std::string& note) {
    for (const auto& fc : test_fields()) {
        ExtensionClassResult res =
            extension_class(fc.field, fc.units, default_galois_datum(1));
        if (res.verdict.status != "nontrivial") {
            note = fc.name + " verdict " + res.verdict.status;
            return false;
        }
        if (!res.verdict.eps_nonzero) {
            note = fc.name + " eps matrix vanished";
            return false;
        }
    }
    return true;
}

// --- criterion 3: symbolic lift independence --------------------------------
bool lift_grid(std::string& note) {
    Clock::time_point t0 = Clock::now();
    for (int r = 3; r <= 8; ++r)
        for (int m = 2; 2 * m <= r; ++m) {
            LiftCheckTrace t = lift_independence_check(r, m);
            if (!t.pass) {
                note = "r=" + std::to_string(r) + " m=" + std::to_string(m);
                return false;
            }
        }
    double elapsed = seconds_since(t0);
    if (elapsed >= 10.0) {
        note = "grid took " + std::to_string(elapsed) + "s";
        return false;
    }
    return true;
}

// --- criterion 4: cohomology table coherence --------------------------------
bool table_ok(const CohomologyTable& t, std::string& note) {
    int r = t.r;
    SymDim alt;
    for (int n = 0; n <= 2 * r; ++n) {
        SymDim term = t.rows[n].Hc - t.rows[n].H + t.rows[n].Hbd;
        alt = (n % 2 == 0) ? alt + term : alt - term;
    }
    if (!alt.is_zero()) { note = "alternating sum nonzero"; return false; }
    if (!t.rows[1].H.is_zero()) { note = "H^1 nonzero"; return false; }
    if (!t.rows[2 * r - 1].Hc.is_zero()) { note = "Hc^{2r-1} nonzero"; return false; }
    for (int n = 0; n <= 2 * r; ++n) {
        if (!(t.rows[n].Hc == t.rows[2 * r - n].H)) {
            note = "Poincare duality fails at n=" + std::to_string(n);
            return false;
        }
        int dual = 2 * r - 1 - n;
        SymDim bd_dual = (dual >= 0 && dual <= 2 * r) ? t.rows[dual].Hbd : SymDim();
        if (!(t.rows[n].Hbd == bd_dual)) {
            note = "boundary duality fails at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool table_grid(std::string& note) {
    for (int r = 2; r <= 6; ++r)
        for (long c = 1; c <= 2; ++c)
            for (long h = 1; h <= 3; ++h) {
                if (h < c) {
                    try {
                        assemble_table_params(r, c, h, 0);
                        note = "missing InconsistentDatum for h<c";
                        return false;
                    } catch (const Error& e) {
                        if (e.code() != "InconsistentDatum") {
                            note = "wrong code " + e.code();
                            return false;
                        }
                    }
                    continue;
                }
                for (int si = 0; si < 3; ++si) {
                    std::optional<long> s;
                    if (si < 2) s = si;
                    CohomologyTable t = assemble_table_params(r, c, h, s);
                    if (!table_ok(t, note)) {
                        note += " (r=" + std::to_string(r) + " c=" + std::to_string(c) +
                                " h=" + std::to_string(h) + ")";
                        return false;
                    }
                }
            }
    return true;
}

// --- criteria 5-7: finite verification families -----------------------------
bool family_all_pass(const std::vector<FamilyOutcome>& out, size_t min_count,
                     std::string& note) {
    if (out.size() < min_count) {
        note = "only " + std::to_string(out.size()) + " instances";
        return false;
    }
    for (const auto& o : out)
        if (!o.pass) {
            note = o.name + ": " + o.detail;
            return false;
        }
    return true;
}

bool shapiro_family(std::string& note) {
    return family_all_pass(run_shapiro_family(), 12, note);
}

bool plectic_family(std::string& note) {
    std::vector<FamilyOutcome> out = run_plectic_family();
    if (!family_all_pass(out, 8, note)) return false;
    bool has_s3 = std::any_of(out.begin(), out.end(), [](const FamilyOutcome& o) {
        return o.name.find("S3") != std::string::npos;
    });
    if (!has_s3) { note = "no nonabelian instance"; return false; }
    // recheck one cyclic instance against the brute-force oracle
    FiniteGroup c2 = group_by_name("C2");
    GModule m = rank1_gmodule(c2, 3, {1, -1});
    PlecticResult r = plectic_h1_check(c2, 2, m);
    if (!r.pass || r.base_divisors != h1_cyclic_oracle(c2, m)) {
        note = "cyclic oracle disagreement";
        return false;
    }
    return true;
}

std::vector<int> order_two_subgroup(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        if (a != g.identity && g.mul(a, a) == g.identity)
            return {g.identity, a};
    return {};
}

bool tensor_family(std::string& note) {
    if (!family_all_pass(run_tensor_family(), 8, note)) return false;
    // dimensions must be binomial(sigma, m) on direct instances
    struct Inst { const char* q; int m; };
    for (const Inst& in : {Inst{"C4", 1}, Inst{"S3", 2}, Inst{"D4", 2}}) {
        FiniteGroup q = group_by_name(in.q);
        std::vector<int> sub = order_two_subgroup(q);
        int sigma = q.order / 2;
        TensorInductionResult r = tensor_induction_check(q, sub, {1, -1}, in.m);
        if (!r.pass || mpz_class(r.dimension) != binomial(sigma, in.m)) {
            note = std::string(in.q) + " dimension mismatch";
            return false;
        }
    }
    return true;
}

// --- criterion 8: cusp resolutions -------------------------------------------
std::vector<mpz_class> raw_period(QuadIrr w) {
    w = reduce_seed(w);
    QuadIrr start = w;
    std::vector<mpz_class> bs;
    for (;;) {
        McfStep st = mcf_step(w);
        bs.push_back(st.b);
        w = st.next;
        if (w == start || bs.size() > 1000) break;
    }
    return bs;
}

bool rotation_equal(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < b.size(); ++i) {
        if (a == b) return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return a == b;
}

bool cusp_resolutions(std::string& note) {
    for (long m : {2L, 3L, 5L, 6L, 7L, 10L}) {
        QuadField f = make_quadfield(m);
        CuspCycle c = cusp_cycle(f);
        std::string tag = "m=" + std::to_string(m) + ": ";
        bool some_big = false;
        for (const auto& b : c.b) {
            if (b < 2) { note = tag + "b_k < 2"; return false; }
            if (b >= 3) some_big = true;
        }
        if (!some_big) { note = tag + "all b_k = 2"; return false; }
        if (!rotation_equal(raw_period(c.seed), c.b)) {
            note = tag + "iteration oracle disagrees";
            return false;
        }
        PeriodMatrix pm = period_matrix(c);
        if (pm.trace * pm.trace - 4 != f.D * pm.s * pm.s) {
            note = tag + "trace identity fails";
            return false;
        }
        if (eigenvalue_unit_power(f, pm) < 1) {
            note = tag + "eigenvalue not a unit power";
            return false;
        }
        if (c.b.size() >= 2 && !intersection_matrix(c).negative_definite) {
            note = tag + "intersection form not negative definite";
            return false;
        }
        NerveRanks qr = nerve_quotient(c);
        if (qr.h0 != 1 || qr.h1 != 1) { note = tag + "nerve ranks"; return false; }
    }
    if (cusp_cycle(make_quadfield(5)).b != std::vector<mpz_class>{3}) {
        note = "m=5 cycle anchor";
        return false;
    }
    if (cusp_cycle(make_quadfield(2)).b != std::vector<mpz_class>{2, 4}) {
        note = "m=2 cycle anchor";
        return false;
    }
    return true;
}

// --- criterion 9: narrow vs wide class numbers -------------------------------
bool class_numbers(std::string& note) {
    for (long m = 2; m <= 200; ++m) {
        if (!is_squarefree(m)) continue;
        QuadField f = make_quadfield(m);
        long h = wide_class_number(m);
        long h_plus = narrow_class_number(f.D).h_plus;
        long expected = fundamental_unit(m).norm == -1 ? h : 2 * h;
        if (h_plus != expected) {
            note = "m=" + std::to_string(m) + ": h=" + std::to_string(h) +
                   " h+=" + std::to_string(h_plus);
            return false;
        }
    }
    if (wide_class_number(5) != 1) { note = "h(5) != 1"; return false; }
    if (narrow_class_number(12).h_plus != 2) { note = "h+(D=12) != 2"; return false; }
    return true;
}

// --- criterion 10: deterministic CLI output ----------------------------------
std::string capture(const std::string& cmd) {
    std::array<char, 4096> buf;
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return out;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    pclose(p);
    return out;
}

bool deterministic_report(const std::string& cli, std::string& note) {
    if (cli.empty()) { note = "CLI path not supplied"; return false; }
    std::string cmd = cli + " report --m 5 --format json 2>&1";
    std::string a = capture(cmd);
    std::string b = capture(cmd);
    if (a.empty()) { note = "no output"; return false; }
    if (a != b) { note = "outputs differ between runs"; return false; }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    struct Criterion {
        const char* label;
        bool (*fn)(std::string&);
    };
    int failures = 0;
    auto report = [&](int idx, const char* label, bool ok, const std::string& note) {
        std::cout << (ok ? "pass" : "FAIL") << " criterion " << idx << ": " << label;
        if (!ok && !note.empty()) std::cout << " -- " << note;
        std::cout << "\n";
        if (!ok) ++failures;
    };

    std::vector<Criterion> criteria = {
        {"regulator rank certificates", regulator_certificates},
        {"extension class verdicts", extension_verdicts},
        {"symbolic lift independence", lift_grid},
        {"cohomology table coherence", table_grid},
        {"Shapiro family", shapiro_family},
        {"wreath H^1 comparison family", plectic_family},
        {"tensor induction family", tensor_family},
        {"cusp resolution invariants", cusp_resolutions},
        {"narrow/wide class number law", class_numbers},
    };
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string note;
        bool ok = false;
        try {
            ok = criteria[i].fn(note);
        } catch (const std::exception& e) {
            note = e.what();
        }
        report(static_cast<int>(i) + 1, criteria[i].label, ok, note);
    }
    {
        std::string note;
        bool ok = false;
        try {
            ok = deterministic_report(cli, note);
        } catch (const std::exception& e) {
            note = e.what();
        }
        report(10, "deterministic report output", ok, note);
    }
    return failures == 0 ? 0 : 1;
}
