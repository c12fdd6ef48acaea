#pragma once

#include <sstream>
#include <string>

#include "json.hpp" // vendored single-header nlohmann/json

#include "oracle.hpp"
#include "spectral.hpp"
#include "theorem.hpp"

namespace nodaltorus {

// Machine-readable output. Conventions: every rational is its canonical
// string (floating point never appears), lattice vectors are integer arrays,
// nodal pairs are [sine, cosine] arrays, signs are "+" / "-". Insertion
// order is preserved so output bytes are reproducible.
using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const ParamTuple& p) {
    return Json::array({p.a().str(), p.b().str(), p.c().str(), p.d().str()});
}

inline Json to_json(const LatticeVector& q) {
    Json a = Json::array();
    for (const auto x : q)
        a.push_back(x);
    return a;
}

inline Json to_json(const NodalPair& pr) { return Json::array({pr.first, pr.second}); }

inline std::string sign_str(Sign s) { return std::string(1, conway_sloane::sign_char(s)); }

inline Json to_json(const SpectrumLine& line) {
    Json j;
    j["eigenvalue"] = line.eigenvalue.str();
    j["degeneracy"] = line.degeneracy();
    Json reps = Json::array();
    for (const auto& q : line.reps)
        reps.push_back(to_json(q));
    j["reps"] = std::move(reps);
    Json pairs = Json::array();
    for (const auto& p : line.nodal_pairs)
        pairs.push_back(to_json(p));
    j["nodal_pairs"] = std::move(pairs);
    return j;
}

inline Json to_json(const Spectrum& s) {
    Json j;
    j["sign"] = sign_str(s.sign);
    j["params"] = to_json(s.params);
    j["cutoff"] = s.cutoff.str();
    j["eigenvalue_unit"] = "4*pi^2"; // reported eigenvalues are q^T Q q
    j["line_count"] = s.lines.size();
    j["total_reps"] = s.total_reps();
    Json lines = Json::array();
    for (const auto& l : s.lines)
        lines.push_back(to_json(l));
    j["lines"] = std::move(lines);
    return j;
}

inline Json to_json(const FirstDifference& d) {
    Json j;
    j["eigenvalue"] = d.eigenvalue.str();
    j["index"] = d.index;
    Json plus = Json::array(), minus = Json::array();
    for (const auto& p : d.plus_pairs)
        plus.push_back(to_json(p));
    for (const auto& p : d.minus_pairs)
        minus.push_back(to_json(p));
    j["plus_pairs"] = std::move(plus);
    j["minus_pairs"] = std::move(minus);
    return j;
}

inline Json to_json(const NodalComparison& cmp) {
    Json j;
    j["params"] = to_json(cmp.plus.params);
    j["cutoff"] = cmp.plus.cutoff.str();
    j["lines_compared"] = cmp.lines_compared();
    j["distinguished"] = cmp.difference.has_value();
    j["first_difference"] = cmp.difference ? to_json(*cmp.difference) : Json(nullptr);
    return j;
}

inline Json forms_json(const std::vector<LinearForm>& forms) {
    Json a = Json::array();
    for (const auto& f : forms)
        a.push_back(f.str());
    return a;
}

inline Json to_json(const ParityBaseReport& r) {
    Json j;
    j["base"] = Json::array({r.base[0], r.base[1], r.base[2], r.base[3]});
    j["even_plus"] = r.even_plus;
    j["odd_plus"] = r.odd_plus;
    j["even_minus"] = r.even_minus;
    j["odd_minus"] = r.odd_minus;
    j["even_side"] = sign_str(r.even_side);
    j["pure"] = r.pure();
    return j;
}

inline Json to_json(const DominanceEntry& e) {
    Json j;
    j["form"] = e.form.str();
    j["gaps"] = Json::array(
        {e.gaps[0].str(), e.gaps[1].str(), e.gaps[2].str(), e.gaps[3].str()});
    j["dominated"] = e.dominated;
    return j;
}

inline Json to_json(const UniqueMaxCertificate& c) {
    Json j;
    j["form"] = c.max_form.str();
    j["side"] = sign_str(c.side);
    j["membership_ok"] = c.membership_ok;
    j["competitors"] = c.competitors.size();
    j["dominated"] = c.dominated_count;
    Json dom = Json::array();
    for (const auto& e : c.competitors)
        dom.push_back(to_json(e));
    j["dominance"] = std::move(dom);
    Json common;
    common["total"] = c.common_probe.size();
    common["dominated_zero_gap"] = c.common_dominated;
    common["dominated_positive"] = c.common_positive;
    common["not_dominated"] = forms_json(c.common_not_dominated);
    j["common_probe"] = std::move(common);
    Json spot;
    spot["params"] = to_json(c.check_params);
    spot["max_value"] = c.check_value.str();
    spot["unique"] = c.check_unique;
    j["spot_check"] = std::move(spot);
    j["ok"] = c.ok;
    return j;
}

inline Json to_json(const GoldenCheck& g) {
    Json j;
    j["match"] = g.match;
    j["missing_plus"] = g.missing_plus;
    j["unexpected_plus"] = g.unexpected_plus;
    j["missing_minus"] = g.missing_minus;
    j["unexpected_minus"] = g.unexpected_minus;
    return j;
}

inline Json to_json(const TheoremReport& r) {
    Json j;
    j["max_m"] = r.max_m;
    j["pass"] = r.pass;
    Json levels = Json::array();
    for (const auto& pm : r.per_m) {
        Json l;
        l["m"] = pm.m;
        l["v_size"] = pm.v_size;
        l["plus_size"] = pm.plus_size;
        l["minus_size"] = pm.minus_size;
        l["only_plus"] = pm.only_plus;
        l["only_minus"] = pm.only_minus;
        l["common"] = pm.common;
        l["equal"] = pm.equal;
        levels.push_back(std::move(l));
    }
    j["levels"] = std::move(levels);
    Json m4;
    m4["only_plus"] = forms_json(r.m4.only_plus);
    m4["only_minus"] = forms_json(r.m4.only_minus);
    m4["common_size"] = r.m4.common.size();
    j["m4"] = std::move(m4);
    j["golden"] = r.golden ? to_json(*r.golden) : Json(nullptr);
    j["parity"] = Json::array({to_json(r.parity[0]), to_json(r.parity[1])});
    Json sum;
    sum["value"] = r.diff_coeff_sum.str();
    sum["ok"] = r.sum_ok;
    j["coeff_sum"] = std::move(sum);
    j["unique_max"] = to_json(r.cert);
    j["failures"] = r.failures;
    return j;
}

inline Json to_json(const IsometricCheck& c) {
    Json j;
    j["params"] = to_json(c.params);
    j["cutoff"] = c.cutoff.str();
    j["lines_compared"] = c.lines_compared;
    j["difference_found"] = c.difference_found;
    j["first_difference"] = c.difference ? to_json(*c.difference) : Json(nullptr);
    j["ok"] = !c.difference_found;
    return j;
}

inline Json to_json(const oracle::ValidationRow& row) {
    Json j;
    j["q"] = to_json(row.q);
    j["part"] = part_name(row.part);
    j["formula"] = row.formula;
    j["slab"] = row.slab;
    j["floodfill"] = row.floodfill;
    j["res"] = row.res;
    j["grid"] = row.grid;
    j["match"] = row.match;
    return j;
}

inline Json to_json(const oracle::ValidationReport& r) {
    Json j;
    j["max_m"] = r.max_m;
    j["variant"] =
        r.variant == oracle::FormulaVariant::standard ? "standard" : "drop-plus-one";
    j["rows"] = Json::array();
    for (const auto& row : r.rows)
        j["rows"].push_back(to_json(row));
    j["mismatches"] = r.mismatches;
    j["pass"] = r.pass;
    return j;
}

// E-set listing for one m: both sides plus the set comparison.
inline Json esets_json(const EigenvalueSet& plus, const EigenvalueSet& minus,
                       const ECompare& cmp) {
    Json j;
    j["m"] = cmp.m;
    j["e_plus"] = forms_json(plus.forms);
    j["e_minus"] = forms_json(minus.forms);
    j["only_plus"] = forms_json(cmp.only_plus);
    j["only_minus"] = forms_json(cmp.only_minus);
    j["common"] = forms_json(cmp.common);
    j["equal"] = cmp.equal();
    return j;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

// One row per representing vector; lines repeat their eigenvalue. The
// optional approx column is display-only and never feeds any computation.
inline std::string spectrum_csv(const Spectrum& s, bool approx = false) {
    std::ostringstream os;
    os << "eigenvalue,degeneracy,q1,q2,q3,q4,nu_im,nu_re";
    if (approx)
        os << ",eigenvalue_approx";
    os << '\n';
    for (const auto& line : s.lines)
        for (std::size_t i = 0; i < line.reps.size(); ++i) {
            const auto& q = line.reps[i];
            os << line.eigenvalue.str() << ',' << line.degeneracy();
            for (const auto x : q)
                os << ',' << x;
            os << ',' << line.nodal_pairs[i].first << ',' << line.nodal_pairs[i].second;
            if (approx)
                os << ',' << line.eigenvalue.to_double();
            os << '\n';
        }
    return os.str();
}

inline std::string validation_csv(const oracle::ValidationReport& r) {
    std::ostringstream os;
    os << "q1,q2,q3,q4,part,formula,slab,floodfill,res,grid,match\n";
    for (const auto& row : r.rows) {
        for (const auto x : row.q)
            os << x << ',';
        os << part_name(row.part) << ',' << row.formula << ',' << row.slab << ','
           << row.floodfill << ',' << row.res << ',' << row.grid << ','
           << (row.match ? "yes" : "no") << '\n';
    }
    return os.str();
}

} // namespace nodaltorus
