#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hmv/cohmodel.hpp"
#include "hmv/errors.hpp"
#include "hmv/extclass.hpp"
#include "hmv/finite_group.hpp"
#include "hmv/lift_algebra.hpp"
#include "hmv/numfield.hpp"
#include "hmv/plectic.hpp"
#include "hmv/quadarith.hpp"
#include "hmv/rational.hpp"
#include "hmv/toroidal.hpp"

using json = nlohmann::ordered_json;
using namespace hmv;

namespace {

int exit_code_for(const Error& e) {
    static const std::set<std::string> invariant_codes{
        "InconsistentData", "PrecisionExhausted", "NonTermination",
        "InvariantsNonzero", "Internal"};
    return invariant_codes.count(e.code()) ? 1 : 2;
}

json interval_json(const Interval& iv) {
    return json{{"lo", iv.lo_string()}, {"hi", iv.hi_string()}};
}

json rational_pair_json(const mpq_class& lo, const mpq_class& hi) {
    return json{{"lo", format_rational(lo)}, {"hi", format_rational(hi)}};
}

struct FieldInput {
    TotallyRealField field;
    UnitSystem units;
    std::optional<long> m; // set for the inline quadratic path
};

// Convert a + b*omega to power-basis coordinates over x = sqrt(m).
FieldElement quadint_coords(const QuadField& f, const QuadInt& u) {
    if (f.one_mod_four())
        return {mpq_class(u.a) + mpq_class(u.b, 2), mpq_class(u.b, 2)};
    return {mpq_class(u.a), mpq_class(u.b)};
}

FieldInput field_from_m(long m) {
    QuadField qf = make_quadfield(m);
    FieldInput in;
    in.m = m;
    in.field = make_field({-mpz_class(m), 0, 1});
    FundamentalUnit fu = fundamental_unit(m);
    in.units = check_units(in.field, {quadint_coords(qf, fu.u)}, UnitProvenance::computed);
    return in;
}

FieldInput field_from_spec(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw bad_input("cannot open field spec '" + path + "'");
    json spec;
    try {
        f >> spec;
    } catch (const std::exception& e) {
        throw bad_input(std::string("field spec is not valid JSON: ") + e.what());
    }
    if (!spec.contains("poly") || !spec["poly"].is_array())
        throw bad_input("field spec needs a \"poly\" array");
    std::vector<mpz_class> coeffs;
    for (const auto& c : spec["poly"]) {
        if (c.is_number_integer())
            coeffs.emplace_back(c.get<long>());
        else if (c.is_string())
            coeffs.emplace_back(c.get<std::string>());
        else
            throw bad_input("poly coefficients must be integers");
    }
    bool assert_irr = spec.value("assert_irreducible", false);

    FieldInput in;
    in.field = make_field(coeffs, assert_irr);

    if (spec.contains("units")) {
        std::vector<FieldElement> units;
        for (const auto& u : spec["units"]) {
            FieldElement e;
            for (const auto& c : u) e.push_back(parse_rational(c.get<std::string>()));
            units.push_back(std::move(e));
        }
        in.units = check_units(in.field, units, UnitProvenance::supplied);
    } else if (in.field.degree == 2 && coeffs[1] == 0 && coeffs[0] < 0 &&
               is_squarefree(-coeffs[0])) {
        long m = mpz_class(-coeffs[0]).get_si();
        QuadField qf = make_quadfield(m);
        FundamentalUnit fu = fundamental_unit(m);
        in.m = m;
        in.units = check_units(in.field, {quadint_coords(qf, fu.u)},
                               UnitProvenance::computed);
    } else {
        throw units_required("supply \"units\" in the field spec (degree " +
                             std::to_string(in.field.degree) + ")");
    }
    return in;
}

FieldInput resolve_field(std::optional<long> m, const std::string& field_path) {
    if (m && !field_path.empty())
        throw bad_input("give either --m or --field, not both");
    if (m) return field_from_m(*m);
    if (!field_path.empty()) return field_from_spec(field_path);
    throw bad_input("a field is required: --m <squarefree> or --field <spec.json>");
}

json field_info_json(const FieldInput& in) {
    json out;
    json poly = json::array();
    for (const auto& c : in.field.poly) poly.push_back(c.get_str());
    out["poly"] = poly;
    out["degree"] = in.field.degree;
    out["discriminant"] = in.field.disc.get_str();
    out["irreducibility"] = in.field.irreducibility_asserted ? "asserted" : "proved";
    json emb = json::array();
    for (const auto& e : in.field.embeddings) emb.push_back(rational_pair_json(e.lo, e.hi));
    out["embeddings"] = emb;
    json units = json::array();
    for (const auto& u : in.units.units) {
        json coords = json::array();
        for (const auto& c : u) coords.push_back(format_rational(c));
        units.push_back(coords);
    }
    out["units"] = units;
    out["unit_norms"] = in.units.norms;
    out["unit_provenance"] =
        in.units.provenance == UnitProvenance::computed ? "computed" : "supplied";
    return out;
}

std::optional<long> parse_s(const std::string& s) {
    if (s == "symbolic") return std::nullopt;
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 0) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw bad_input("--s must be a nonnegative integer or \"symbolic\"");
    }
}

GaloisDatum load_level(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw bad_input("cannot open level datum '" + path + "'");
    json spec;
    try {
        f >> spec;
    } catch (const std::exception& e) {
        throw bad_input(std::string("level datum is not valid JSON: ") + e.what());
    }
    auto perms = [&](const char* key) {
        std::vector<Perm> out;
        for (const auto& p : spec.at(key)) out.push_back(p.get<Perm>());
        return out;
    };
    FiniteGroup g = group_by_name(spec.at("group").get<std::string>());
    std::vector<Perm> sigma;
    if (spec.contains("sigma"))
        for (const auto& p : spec["sigma"]) sigma.push_back(p.get<Perm>());
    return make_galois_datum(g, perms("pi0"), perms("cusps"),
                             spec.at("eps").get<std::vector<int>>(), sigma);
}

json table_json(const CohomologyTable& t) {
    json out;
    out["params"] = {{"r", t.r},
                     {"components", t.c},
                     {"cusps", t.h_inf},
                     {"s", t.s ? json(*t.s) : json("symbolic")}};
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r;
        r["n"] = row.n;
        r["Hc"] = row.Hc.str();
        r["H"] = row.H.str();
        r["Hint"] = row.Hint.str();
        r["Hbd"] = row.Hbd.str();
        std::set<int> weights;
        for (const auto& p : row.bd_pieces) weights.insert(p.weight);
        for (const auto& p : row.int_pieces) weights.insert(p.weight);
        r["weights"] = json(weights);
        rows.push_back(std::move(r));
    }
    out["table"] = rows;
    return out;
}

void print_table_text(const CohomologyTable& t, std::ostream& os) {
    os << "r=" << t.r << " components=" << t.c << " cusps=" << t.h_inf << " s=";
    if (t.s)
        os << *t.s;
    else
        os << "symbolic";
    os << "\n  n |   Hc |    H | Hint |  Hbd\n";
    for (const auto& row : t.rows) {
        os << "  " << row.n << " | " << row.Hc.str() << " | " << row.H.str() << " | "
           << row.Hint.str() << " | " << row.Hbd.str() << "\n";
    }
}

json splitting_json(const SplittingReport& sr) {
    json out;
    out["split_compact"] = sr.split_compact;
    out["split_ordinary"] = sr.split_ordinary;
    out["nonsplit"] = sr.nonsplit;
    out["uniqueness_reason"] = sr.uniqueness_reason;
    out["quadratic_remark"] = sr.quadratic_remark;
    return out;
}

json extension_json(const ExtensionClassResult& res) {
    json out;
    out["regulator"] = interval_json(regulator(res.matrix));
    json matrix = json::array();
    for (const auto& row : res.matrix.entries) {
        json r = json::array();
        for (const auto& e : row) r.push_back(interval_json(e));
        matrix.push_back(std::move(r));
    }
    out["matrix"] = matrix;
    out["precision_bits"] = res.matrix.precision_bits;
    out["verdict"] = res.verdict.status;
    out["eps_nonzero"] = res.verdict.eps_nonzero;
    out["sign_convention"] = res.cls.sign_convention;
    out["eps_matrix"] = res.cls.eps_matrix;
    json kummer = json::array();
    for (const auto& u : res.cls.kummer_part) {
        json coords = json::array();
        for (const auto& c : u) coords.push_back(format_rational(c));
        kummer.push_back(coords);
    }
    out["kummer_part"] = kummer;
    return out;
}

json cusp_resolution_json(long m) {
    QuadField qf = make_quadfield(m);
    CuspCycle cycle = cusp_cycle(qf);
    json out;
    out["m"] = m;
    out["D"] = qf.D.get_str();
    json bs = json::array();
    for (const auto& b : cycle.b) bs.push_back(b.get_str());
    out["cycle"] = bs;
    out["seed"] = format_quadirr(cycle.seed);
    PeriodMatrix pm = period_matrix(cycle);
    out["period_matrix"] = json::array(
        {json::array({pm.M[0][0].get_str(), pm.M[0][1].get_str()}),
         json::array({pm.M[1][0].get_str(), pm.M[1][1].get_str()})});
    out["trace"] = pm.trace.get_str();
    out["eigenvalue"] = format_quadint(qf, period_eigenvalue(qf, pm));
    out["eigenvalue_unit_power"] = eigenvalue_unit_power(qf, pm);
    if (cycle.b.size() >= 2) {
        IntersectionMatrix im = intersection_matrix(cycle);
        json rows = json::array();
        for (const auto& row : im.entries) {
            json r = json::array();
            for (const auto& e : row) r.push_back(e.get_str());
            rows.push_back(std::move(r));
        }
        out["intersection_matrix"] = rows;
        out["negative_definite"] = im.negative_definite;
    } else {
        out["intersection_matrix"] = nullptr;
        out["negative_definite"] = nullptr;
    }
    NerveRanks tr = nerve_truncated(static_cast<long>(cycle.b.size()));
    NerveRanks qr = nerve_quotient(cycle);
    out["nerve"] = {{"truncated", {tr.h0, tr.h1}}, {"quotient", {qr.h0, qr.h1}}};
    Pic0Rank p0 = pic0_rank(qf, cycle);
    out["pic0_rank"] = p0.rank;
    return out;
}

json family_json(const std::vector<FamilyOutcome>& outcomes, bool& all_pass) {
    json arr = json::array();
    for (const auto& o : outcomes) {
        all_pass = all_pass && o.pass;
        arr.push_back({{"name", o.name}, {"pass", o.pass}, {"detail", o.detail}});
    }
    return arr;
}

int run_plectic_spec(const std::string& path, json& out, bool& all_pass) {
    std::ifstream f(path);
    if (!f) throw bad_input("cannot open plectic spec '" + path + "'");
    json spec;
    try {
        f >> spec;
    } catch (const std::exception& e) {
        throw bad_input(std::string("plectic spec is not valid JSON: ") + e.what());
    }
    json results = json::array();
    for (const auto& inst : spec.at("instances")) {
        std::string kind = inst.at("kind").get<std::string>();
        FiniteGroup q = group_by_name(inst.at("Q").get<std::string>());
        if (kind == "plectic") {
            GModule m = rank1_gmodule(q, inst.at("modulus").get<long>(),
                                      inst.at("values").get<std::vector<long>>());
            PlecticResult r = plectic_h1_check(q, inst.at("size").get<int>(), m);
            all_pass = all_pass && r.pass;
            results.push_back({{"kind", kind},
                               {"pass", r.pass},
                               {"wreath", format_divisors(r.wreath_divisors)},
                               {"base", format_divisors(r.base_divisors)}});
        } else if (kind == "shapiro") {
            std::vector<int> sub = inst.at("G").get<std::vector<int>>();
            FiniteGroup sub_g = subgroup_group(q, sub);
            GModule m = rank1_gmodule(sub_g, inst.at("modulus").get<long>(),
                                      inst.at("values").get<std::vector<long>>());
            ShapiroResult r = shapiro_check(q, sub, m);
            all_pass = all_pass && r.pass;
            results.push_back({{"kind", kind},
                               {"pass", r.pass},
                               {"restricted", format_divisors(r.restricted_divisors)},
                               {"subgroup", format_divisors(r.subgroup_divisors)}});
        } else if (kind == "tensor") {
            TensorInductionResult r = tensor_induction_check(
                q, inst.at("G").get<std::vector<int>>(),
                inst.at("chi").get<std::vector<int>>(), inst.at("m").get<int>());
            all_pass = all_pass && r.pass;
            results.push_back(
                {{"kind", kind}, {"pass", r.pass}, {"dimension", r.dimension}});
        } else {
            throw bad_input("unknown instance kind '" + kind + "'");
        }
    }
    out["instances"] = results;
    return 0;
}

json report_json(const FieldInput& in, std::optional<long> s, long precision,
                 std::string& verdict) {
    json out;
    json field = field_info_json(in);
    field["provenance"] = in.m ? "derived from m" : "supplied";
    out["field"] = field;

    if (in.m) {
        json cn;
        cn["h"] = wide_class_number(*in.m);
        QuadField qf = make_quadfield(*in.m);
        cn["h_plus"] = narrow_class_number(qf.D).h_plus;
        cn["fundamental_unit_norm"] = fundamental_unit(*in.m).norm;
        out["class_numbers"] = cn;
    }

    GaloisDatum datum = default_galois_datum(
        in.m ? static_cast<int>(wide_class_number(*in.m)) : 1);
    ExtensionClassResult ext =
        extension_class(in.field, in.units, datum, 1e-6, precision);
    out["extension_class"] = extension_json(ext);
    verdict = ext.verdict.status;

    CohomologyTable table = assemble_table(in.field.degree, datum, s);
    out["cohomology"] = table_json(table);
    out["splitting"] = splitting_json(splitting_report(in.field.degree));

    if (in.m) out["cusp_resolution"] = cusp_resolution_json(*in.m);
    out["verdict"] = verdict;
    return out;
}

struct SelftestSummary {
    int checks = 0;
    int failures = 0;
    std::vector<std::string> lines;

    void record(const std::string& name, bool pass, const std::string& detail = "") {
        ++checks;
        if (!pass) ++failures;
        std::string line = std::string(pass ? "pass " : "FAIL ") + name;
        if (!detail.empty()) line += " (" + detail + ")";
        lines.push_back(line);
    }
};

void selftest_regulators(SelftestSummary& sum, bool sabotage_rowsum) {
    for (long m : {2L, 3L, 5L, 10L}) {
        FieldInput in = field_from_m(m);
        RegulatorMatrix rm = hodge_regulator_matrix(in.field, in.units);
        Interval reg = regulator(rm);
        bool pos = reg.lo_double() >= 1e-6;
        bool rows_ok = true;
        for (auto& row : rm.entries) {
            Interval s = row[0];
            for (size_t i = 1; i < row.size(); ++i) s = s + row[i];
            if (sabotage_rowsum) s = s + Interval::from_int(1, 64);
            rows_ok = rows_ok && s.contains_zero();
        }
        sum.record("regulator m=" + std::to_string(m), pos && rows_ok,
                   rows_ok ? "interval [" + reg.lo_string() + ", " + reg.hi_string() + "]"
                           : "row sum does not contain 0");
    }
}

void selftest_tables(SelftestSummary& sum) {
    bool ok = true;
    for (int r = 2; r <= 6 && ok; ++r)
        for (long c = 1; c <= 2 && ok; ++c)
            for (long h = c; h <= 3 && ok; ++h) {
                CohomologyTable t = assemble_table_params(r, c, h, 1);
                SymDim alt;
                for (int n = 0; n <= 2 * r; ++n) {
                    SymDim term = t.rows[n].Hc - t.rows[n].H + t.rows[n].Hbd;
                    alt = (n % 2 == 0) ? alt + term : alt - term;
                }
                ok = ok && alt.is_zero() && t.rows[1].H.is_zero();
                for (int n = 0; n <= 2 * r; ++n)
                    ok = ok && t.rows[n].Hc == t.rows[2 * r - n].H;
            }
    sum.record("cohomology table coherence", ok);
}

void selftest_lifts(SelftestSummary& sum) {
    bool ok = true;
    for (int r = 3; r <= 8; ++r)
        for (int m = 2; 2 * m <= r; ++m) ok = ok && lift_independence_check(r, m).pass;
    sum.record("lift independence grid", ok);
}

void selftest_cusps(SelftestSummary& sum) {
    bool ok = true;
    for (long m : {2L, 3L, 5L, 6L, 7L, 10L}) {
        QuadField qf = make_quadfield(m);
        CuspCycle c = cusp_cycle(qf);
        PeriodMatrix pm = period_matrix(c);
        ok = ok && (pm.trace * pm.trace - 4 == qf.D * pm.s * pm.s);
        ok = ok && eigenvalue_unit_power(qf, pm) >= 1;
        if (c.b.size() >= 2) ok = ok && intersection_matrix(c).negative_definite;
        NerveRanks qr = nerve_quotient(c);
        ok = ok && qr.h0 == 1 && qr.h1 == 1;
    }
    sum.record("cusp resolution suite", ok);
}

void selftest_family(SelftestSummary& sum, const std::string& name,
                     const std::vector<FamilyOutcome>& outcomes) {
    for (const auto& o : outcomes) sum.record(name + ": " + o.name, o.pass, o.detail);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for Hilbert modular boundary cohomology"};
    app.require_subcommand(1);

    std::optional<long> m_flag;
    std::string field_path, level_path, s_flag = "symbolic", format = "json";
    std::string family = "builtin", spec_path, only, sabotage;
    long precision = 128;

    auto add_field_flags = [&](CLI::App* cmd) {
        cmd->add_option("--m", m_flag, "squarefree m for the real quadratic field");
        cmd->add_option("--field", field_path, "field spec JSON path");
    };
    auto add_format_flag = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json | table");
    };

    CLI::App* cmd_field = app.add_subcommand("field-info", "field data and units");
    add_field_flags(cmd_field);
    add_format_flag(cmd_field);

    CLI::App* cmd_table = app.add_subcommand("cohomology-table", "graded dimension table");
    add_field_flags(cmd_table);
    add_format_flag(cmd_table);
    cmd_table->add_option("--level", level_path, "level datum JSON path");
    cmd_table->add_option("--s", s_flag, "cusp form dimension or \"symbolic\"");

    CLI::App* cmd_ext = app.add_subcommand("extension-class", "regulator certificate");
    add_field_flags(cmd_ext);
    add_format_flag(cmd_ext);
    cmd_ext->add_option("--precision", precision, "starting precision bits");

    CLI::App* cmd_cusp = app.add_subcommand("cusp-resolution", "boundary cycle data");
    cmd_cusp->add_option("--m", m_flag, "squarefree m")->required();
    add_format_flag(cmd_cusp);

    CLI::App* cmd_plectic = app.add_subcommand("plectic-check", "finite group verifiers");
    cmd_plectic->add_option("--family", family, "builtin");
    cmd_plectic->add_option("--spec", spec_path, "instance list JSON path");
    cmd_plectic->add_option("--only", only, "shapiro | plectic | tensor");
    add_format_flag(cmd_plectic);

    CLI::App* cmd_report = app.add_subcommand("report", "full document");
    add_field_flags(cmd_report);
    add_format_flag(cmd_report);
    cmd_report->add_option("--s", s_flag, "cusp form dimension or \"symbolic\"");
    cmd_report->add_option("--precision", precision, "starting precision bits");

    CLI::App* cmd_self = app.add_subcommand("selftest", "built-in acceptance families");
    cmd_self->add_option("--only", only,
                         "regulator | tables | lifts | cusps | shapiro | plectic | tensor");
    cmd_self->add_option("--sabotage", sabotage, "inject a fault (rowsum)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_field->parsed()) {
            FieldInput in = resolve_field(m_flag, field_path);
            json out = field_info_json(in);
            if (format == "table") {
                std::cout << "degree " << in.field.degree << ", discriminant "
                          << in.field.disc.get_str() << "\n";
                for (const auto& u : in.units.units)
                    std::cout << "unit " << format_element(u) << "\n";
            } else {
                std::cout << out.dump(2) << "\n";
            }
            return 0;
        }
        if (cmd_table->parsed()) {
            FieldInput in = resolve_field(m_flag, field_path);
            std::optional<long> s = parse_s(s_flag);
            GaloisDatum datum =
                level_path.empty()
                    ? default_galois_datum(
                          in.m ? static_cast<int>(wide_class_number(*in.m)) : 1)
                    : load_level(level_path);
            CohomologyTable t = assemble_table(in.field.degree, datum, s);
            if (format == "table")
                print_table_text(t, std::cout);
            else
                std::cout << table_json(t).dump(2) << "\n";
            return 0;
        }
        if (cmd_ext->parsed()) {
            FieldInput in = resolve_field(m_flag, field_path);
            GaloisDatum datum = default_galois_datum(
                in.m ? static_cast<int>(wide_class_number(*in.m)) : 1);
            ExtensionClassResult res =
                extension_class(in.field, in.units, datum, 1e-6, precision);
            json out = extension_json(res);
            out["split_degrees"] = splitting_json(splitting_report(in.field.degree));
            std::cout << out.dump(2) << "\n";
            return res.verdict.status == "nontrivial" ? 0 : 1;
        }
        if (cmd_cusp->parsed()) {
            std::cout << cusp_resolution_json(*m_flag).dump(2) << "\n";
            return 0;
        }
        if (cmd_plectic->parsed()) {
            json out;
            bool all_pass = true;
            if (!spec_path.empty()) {
                run_plectic_spec(spec_path, out, all_pass);
            } else {
                if (family != "builtin")
                    throw bad_input("unknown family '" + family + "'");
                json families;
                if (only.empty() || only == "shapiro")
                    families["shapiro"] = family_json(run_shapiro_family(), all_pass);
                if (only.empty() || only == "plectic")
                    families["plectic"] = family_json(run_plectic_family(), all_pass);
                if (only.empty() || only == "tensor")
                    families["tensor"] = family_json(run_tensor_family(), all_pass);
                if (families.empty())
                    throw bad_input("unknown family filter '" + only + "'");
                out["families"] = families;
            }
            out["all_pass"] = all_pass;
            std::cout << out.dump(2) << "\n";
            return all_pass ? 0 : 1;
        }
        if (cmd_report->parsed()) {
            FieldInput in = resolve_field(m_flag, field_path);
            std::optional<long> s = parse_s(s_flag);
            std::string verdict;
            json out = report_json(in, s, precision, verdict);
            if (format == "table") {
                std::cout << "verdict: " << verdict << "\n";
            } else {
                std::cout << out.dump(2) << "\n";
            }
            return verdict == "nontrivial" ? 0 : 1;
        }
        if (cmd_self->parsed()) {
            if (!sabotage.empty() && sabotage != "rowsum")
                throw bad_input("unknown sabotage '" + sabotage + "'");
            SelftestSummary sum;
            if (only.empty() || only == "regulator")
                selftest_regulators(sum, sabotage == "rowsum");
            if (only.empty() || only == "tables") selftest_tables(sum);
            if (only.empty() || only == "lifts") selftest_lifts(sum);
            if (only.empty() || only == "cusps") selftest_cusps(sum);
            if (only.empty() || only == "shapiro")
                selftest_family(sum, "shapiro", run_shapiro_family());
            if (only.empty() || only == "plectic")
                selftest_family(sum, "plectic", run_plectic_family());
            if (only.empty() || only == "tensor")
                selftest_family(sum, "tensor", run_tensor_family());
            if (sum.checks == 0) throw bad_input("unknown filter '" + only + "'");
            for (const auto& line : sum.lines) std::cout << line << "\n";
            std::cout << sum.checks - sum.failures << "/" << sum.checks << " checks passed\n";
            return sum.failures == 0 ? 0 : 1;
        }
    } catch (const Error& e) {
        std::string detail = e.what();
        const std::string prefix = e.code() + ": ";
        if (detail.rfind(prefix, 0) == 0) detail = detail.substr(prefix.size());
        json err{{"error", e.code()}, {"detail", detail}};
        std::cout << err.dump(2) << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        json err{{"error", "Internal"}, {"detail", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 2;
}
