// Command-line surface for the nodaltorus library: exact Laplace spectra and
// nodal sequences of the Conway-Sloane flat 4-tori, with machine-readable
// (JSON/CSV) and human-readable (pretty) output.
//
// Exit codes, uniform across subcommands:
//   0  success (for `compare`: the pair was distinguished)
//   1  internal invariant violation, or a verification/validation failure
//   2  invalid input (bad flags, malformed rationals, precondition violations)
//   3  `compare` only: not distinguished below the given cutoff

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "nodaltorus/nodaltorus.hpp"
#include "nodaltorus/serialize.hpp"

#ifndef NODALTORUS_GOLDEN_DIR
#define NODALTORUS_GOLDEN_DIR ""
#endif

namespace {

using nodaltorus::GridDegeneracyError;
using nodaltorus::InternalError;
using nodaltorus::InvalidInputError;
using nodaltorus::Json;
using nodaltorus::LinearForm;
using nodaltorus::ParamTuple;
using nodaltorus::Rational;
using nodaltorus::Sign;
namespace oracle = nodaltorus::oracle;
namespace cs = nodaltorus::conway_sloane;

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out.good())
        throw InvalidInputError("cannot open output file: " + output_path);
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Pretty printing
// ---------------------------------------------------------------------------

// Factors the coefficient gcd out of an eigenvalue form so a form stored as
// "1/3*b + 4/3*c + 25/3*d" prints as "(4*pi^2/3)(b+4c+25d)": the physical
// eigenvalue with the common rational up front and primitive integer
// coefficients inside.
std::string pretty_form(const LinearForm& f) {
    if (f.is_zero())
        return "0";
    const Rational g = f.content();
    std::string factor = "4*pi^2";
    if (g.num() != 1)
        factor += "*" + g.num().str();
    if (g.den() != 1)
        factor += "/" + g.den().str();
    const auto prim = f.primitive();
    std::string terms;
    bool first = true;
    for (std::size_t i = 0; i < prim.size(); ++i) {
        const Rational& c = prim[i];
        if (c.is_zero())
            continue;
        if (!first)
            terms += c.sign() < 0 ? "-" : "+";
        else if (c.sign() < 0)
            terms += "-";
        const Rational a = c.abs();
        if (a != Rational(1))
            terms += a.str();
        terms += LinearForm::kVarNames[i];
        first = false;
    }
    return "(" + factor + ")(" + terms + ")";
}

std::string pretty_pairs(const std::vector<nodaltorus::NodalPair>& pairs) {
    std::string out = "[";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i)
            out += " ";
        out += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
    return out + "]";
}

std::string pretty_spectrum(const nodaltorus::Spectrum& s, bool approx) {
    std::ostringstream os;
    os << "flat torus T" << cs::sign_char(s.sign) << "(" << s.params.str() << "), spectrum up to "
       << s.cutoff.str() << " in units of 4*pi^2\n"
       << s.lines.size() << " eigenvalue lines, " << s.total_reps() << " representing vectors\n";
    for (std::size_t i = 0; i < s.lines.size(); ++i) {
        const auto& line = s.lines[i];
        os << (i + 1) << ": lambda = " << line.eigenvalue.str();
        if (approx)
            os << " (~" << line.eigenvalue.to_double() << ")";
        os << ", degeneracy " << line.degeneracy() << ", nodal pairs "
           << pretty_pairs(line.sorted_pairs()) << "\n";
    }
    return os.str();
}

std::string pretty_compare(const nodaltorus::NodalComparison& cmp) {
    std::ostringstream os;
    os << "T+(" << cmp.plus.params.str() << ") vs T-(" << cmp.plus.params.str()
       << "), cutoff " << cmp.plus.cutoff.str() << ": " << cmp.lines_compared()
       << " isospectral lines compared\n";
    if (cmp.difference) {
        os << "distinguished at eigenvalue " << cmp.difference->eigenvalue.str() << " (line "
           << cmp.difference->index << ")\n"
           << "  T+ nodal pairs: " << pretty_pairs(cmp.difference->plus_pairs) << "\n"
           << "  T- nodal pairs: " << pretty_pairs(cmp.difference->minus_pairs) << "\n";
    } else {
        os << "none below cutoff " << cmp.plus.cutoff.str()
           << ": nodal sequences agree on every line\n";
    }
    return os.str();
}

std::string pretty_forms_block(const std::vector<LinearForm>& forms, const std::string& head) {
    std::ostringstream os;
    os << head << " (" << forms.size() << "):\n";
    for (const auto& f : forms)
        os << "  " << pretty_form(f) << "\n";
    return os.str();
}

std::string pretty_esets(std::int64_t m, const nodaltorus::EigenvalueSet& plus,
                         const nodaltorus::EigenvalueSet& minus, const nodaltorus::ECompare& cmp) {
    std::ostringstream os;
    const std::string sm = std::to_string(m);
    os << pretty_forms_block(plus.forms, "E_" + sm + "^+")
       << pretty_forms_block(minus.forms, "E_" + sm + "^-")
       << pretty_forms_block(cmp.only_plus, "only in E_" + sm + "^+")
       << pretty_forms_block(cmp.only_minus, "only in E_" + sm + "^-")
       << "common: " << cmp.common.size() << " forms; sets "
       << (cmp.equal() ? "equal" : "differ") << "\n";
    return os.str();
}

std::string pretty_theorem(const nodaltorus::TheoremReport& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << ": nodal sequences distinguish T+ from T-\n";
    for (const auto& pm : r.per_m)
        os << "  m=" << pm.m << ": |V_m|=" << pm.v_size << ", |E_m^+|=" << pm.plus_size
           << ", |E_m^-|=" << pm.minus_size << ", only+=" << pm.only_plus
           << ", only-=" << pm.only_minus << ", common=" << pm.common
           << (pm.equal ? " (equal)" : " (differ)") << "\n";
    if (r.golden)
        os << "  golden E_4 difference lists: " << (r.golden->match ? "match" : "MISMATCH") << "\n";
    for (const auto& p : r.parity)
        os << "  base (" << p.base[0] << "," << p.base[1] << "," << p.base[2] << "," << p.base[3]
           << "): even permutations on T" << cs::sign_char(p.even_side) << ", odd on T"
           << cs::sign_char(p.even_side == Sign::plus ? Sign::minus : Sign::plus)
           << (p.pure() ? "" : " [IMPURE]") << "\n";
    os << "  difference forms all have coefficient sum " << r.diff_coeff_sum.str()
       << (r.sum_ok ? "" : " [VIOLATED]") << "\n";
    os << "  max difference form " << pretty_form(r.cert.max_form) << " on T"
       << cs::sign_char(r.cert.side) << ": " << r.cert.dominated_count << "/"
       << r.cert.competitors.size() << " competitors dominated, spot check at ("
       << r.cert.check_params.str() << ") gives " << r.cert.check_value.str()
       << (r.cert.check_unique ? " (unique)" : " (NOT UNIQUE)") << "\n";
    for (const auto& f : r.failures)
        os << "  failure: " << f << "\n";
    return os.str();
}

std::string pretty_validation(const oracle::ValidationReport& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << ": nodal-count formula vs slab and flood-fill oracles, "
       << r.rows.size() << " cases up to |q|_1 = " << r.max_m;
    if (r.variant == oracle::FormulaVariant::drop_plus_one)
        os << " (deliberately broken drop-plus-one variant)";
    os << "\n" << r.mismatches << " mismatches\n";
    for (const auto& row : r.rows) {
        if (row.match)
            continue;
        os << "  mismatch at q=(";
        for (std::size_t i = 0; i < row.q.size(); ++i)
            os << (i ? "," : "") << row.q[i];
        os << ") " << part_name(row.part) << ": formula " << row.formula << ", slab " << row.slab
           << ", floodfill " << row.floodfill << "\n";
    }
    return os.str();
}

std::string pretty_isometric(const nodaltorus::IsometricCheck& c) {
    std::ostringstream os;
    os << "isometric pair T+(" << c.params.str() << ") / T-(" << c.params.str() << "), cutoff "
       << c.cutoff.str() << ": " << c.lines_compared << " lines compared\n"
       << (c.difference_found
               ? "UNEXPECTED nodal difference found (isometry violated)\n"
               : "spectra and nodal sequences agree on every line, as isometry requires\n");
    return os.str();
}

// ---------------------------------------------------------------------------
// Shared option state
// ---------------------------------------------------------------------------

struct Options {
    std::string sign = "+";
    std::string params;
    std::string cutoff;
    std::int64_t lines = 0;
    std::int64_t max_m = 4;
    std::int64_t m = 4;
    std::string format = "json";
    std::string output;
    std::string golden_dir = NODALTORUS_GOLDEN_DIR;
    std::string inject_bug;
    std::int64_t seed = 0;
    bool approx = false;
    bool no_golden = false;
};

void check_format(const std::string& format, bool csv_ok) {
    if (format == "json" || format == "pretty")
        return;
    if (format == "csv" && csv_ok)
        return;
    throw InvalidInputError("unsupported --format for this command: " + format);
}

Rational cutoff_or_lines(const Options& opt, Sign sign, const ParamTuple& p,
                         std::int64_t default_lines) {
    if (!opt.cutoff.empty())
        return Rational::parse(opt.cutoff);
    std::int64_t lines = opt.lines > 0 ? opt.lines : default_lines;
    if (lines <= 0)
        throw InvalidInputError("need --cutoff or a positive --lines");
    return nodaltorus::cutoff_for_line_count(sign, p, static_cast<std::size_t>(lines));
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_spectrum(const Options& opt) {
    check_format(opt.format, true);
    if (opt.cutoff.empty() && opt.lines <= 0)
        throw InvalidInputError("spectrum: exactly one of --cutoff or --lines is required");
    if (opt.sign.size() != 1)
        throw InvalidInputError("--sign must be + or -");
    const Sign sign = cs::parse_sign(opt.sign[0]);
    const ParamTuple p = ParamTuple::parse(opt.params);
    const Rational cutoff = cutoff_or_lines(opt, sign, p, 0);
    const auto s = nodaltorus::build_spectrum(sign, p, cutoff);
    if (opt.format == "json")
        emit(dump(nodaltorus::to_json(s)), opt.output);
    else if (opt.format == "csv")
        emit(nodaltorus::spectrum_csv(s, opt.approx), opt.output);
    else
        emit(pretty_spectrum(s, opt.approx), opt.output);
    return 0;
}

int cmd_compare(const Options& opt) {
    check_format(opt.format, false);
    const ParamTuple p = ParamTuple::parse(opt.params);
    const Rational cutoff = Rational::parse(opt.cutoff);
    const auto cmp = nodaltorus::compare_nodal(p, cutoff);
    if (opt.format == "json")
        emit(dump(nodaltorus::to_json(cmp)), opt.output);
    else
        emit(pretty_compare(cmp), opt.output);
    return cmp.difference ? 0 : 3;
}

int cmd_verify_theorem(const Options& opt) {
    check_format(opt.format, false);
    std::optional<nodaltorus::GoldenData> golden;
    if (!opt.no_golden && !opt.golden_dir.empty())
        golden = nodaltorus::load_golden_dir(opt.golden_dir);
    const auto report = nodaltorus::verify_theorem(opt.max_m, golden);
    if (opt.format == "json")
        emit(dump(nodaltorus::to_json(report)), opt.output);
    else
        emit(pretty_theorem(report), opt.output);
    return report.pass ? 0 : 1;
}

int cmd_validate_nodal(const Options& opt) {
    check_format(opt.format, true);
    oracle::FormulaVariant variant = oracle::FormulaVariant::standard;
    if (opt.inject_bug == "drop-plus-one")
        variant = oracle::FormulaVariant::drop_plus_one;
    else if (!opt.inject_bug.empty())
        throw InvalidInputError("unknown --inject-bug: " + opt.inject_bug);
    const auto report = oracle::validate_formula(opt.max_m, {}, variant);
    if (opt.format == "json")
        emit(dump(nodaltorus::to_json(report)), opt.output);
    else if (opt.format == "csv")
        emit(nodaltorus::validation_csv(report), opt.output);
    else
        emit(pretty_validation(report), opt.output);
    return report.pass ? 0 : 1;
}

int cmd_esets(const Options& opt) {
    check_format(opt.format, false);
    const auto plus = nodaltorus::build_e_set(Sign::plus, opt.m);
    const auto minus = nodaltorus::build_e_set(Sign::minus, opt.m);
    const auto cmp = nodaltorus::compare_e_sets(opt.m);
    if (opt.format == "json")
        emit(dump(nodaltorus::esets_json(plus, minus, cmp)), opt.output);
    else
        emit(pretty_esets(opt.m, plus, minus, cmp), opt.output);
    return 0;
}

int cmd_isometric_check(const Options& opt) {
    check_format(opt.format, false);
    const ParamTuple p = ParamTuple::parse(opt.params);
    const Rational cutoff = cutoff_or_lines(opt, Sign::plus, p, 25);
    const auto chk = nodaltorus::check_isometric_degenerate(p, cutoff);
    if (opt.format == "json")
        emit(dump(nodaltorus::to_json(chk)), opt.output);
    else
        emit(pretty_isometric(chk), opt.output);
    return chk.difference_found ? 1 : 0;
}

void add_common(CLI::App* cmd, Options& opt, bool with_format = true) {
    if (with_format)
        cmd->add_option("--format", opt.format, "output format: json, csv, or pretty")
            ->default_str("json");
    cmd->add_option("-o,--output", opt.output, "write output to a file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact Laplace spectra and nodal sequences of the Conway-Sloane flat 4-tori"};
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand(
        "spectrum", "list an eigenvalue spectrum with degeneracies and nodal counts");
    spectrum->add_option("--sign", opt.sign, "which torus of the pair: + or -");
    spectrum->add_option("--params", opt.params, "parameters a,b,c,d as positive rationals")
        ->required();
    auto* sc = spectrum->add_option("--cutoff", opt.cutoff, "list eigenvalues <= this rational");
    spectrum->add_option("--lines", opt.lines, "list at least this many eigenvalue lines")
        ->excludes(sc);
    spectrum->add_flag("--approx", opt.approx, "add a display-only decimal eigenvalue column");
    add_common(spectrum, opt);

    auto* compare = app.add_subcommand(
        "compare", "find the first nodal-sequence difference between T+ and T-");
    compare->add_option("--params", opt.params, "parameters a,b,c,d as positive rationals")
        ->required();
    compare->add_option("--cutoff", opt.cutoff, "compare eigenvalue lines up to this rational")
        ->required();
    add_common(compare, opt);

    auto* verify = app.add_subcommand(
        "verify-theorem", "run the full symbolic distinction certificate");
    verify->add_option("--max-m", opt.max_m, "verify eigenvalue sets E_m for 1 <= m <= max-m");
    verify->add_option("--golden-dir", opt.golden_dir,
                       "directory with the frozen E_4 difference lists");
    verify->add_flag("--no-golden", opt.no_golden, "skip the golden-list cross-check");
    add_common(verify, opt);

    auto* validate = app.add_subcommand(
        "validate-nodal", "check the nodal-count formula against independent oracles");
    validate->add_option("--max-m", opt.max_m, "validate all q with |q|_1 <= max-m")->required();
    validate->add_option("--inject-bug", opt.inject_bug,
                         "falsifiability harness: drop-plus-one breaks the formula on purpose");
    validate->add_option("--seed", opt.seed,
                         "recorded for reproducibility; the sweep is exhaustive and deterministic");
    add_common(validate, opt);

    auto* esets = app.add_subcommand("e-sets", "dump the symbolic eigenvalue sets E_m^+/-");
    esets->add_option("--m", opt.m, "1-norm level m")->required();
    add_common(esets, opt);

    auto* isometric = app.add_subcommand(
        "isometric-check", "confirm agreement for degenerate (isometric) parameters");
    isometric->add_option("--params", opt.params,
                          "parameters a,b,c,d with a repeat, e.g. 1,1,2,3")
        ->required();
    auto* ic = isometric->add_option("--cutoff", opt.cutoff, "compare lines up to this rational");
    isometric->add_option("--lines", opt.lines, "compare at least this many lines (default 25)")
        ->excludes(ic);
    add_common(isometric, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit 0; any parse failure is invalid input
    }

    try {
        if (spectrum->parsed())
            return cmd_spectrum(opt);
        if (compare->parsed())
            return cmd_compare(opt);
        if (verify->parsed())
            return cmd_verify_theorem(opt);
        if (validate->parsed())
            return cmd_validate_nodal(opt);
        if (esets->parsed())
            return cmd_esets(opt);
        if (isometric->parsed())
            return cmd_isometric_check(opt);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GridDegeneracyError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
