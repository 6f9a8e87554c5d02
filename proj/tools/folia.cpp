// Command-line front end for the foliation toolkit: parsing, dispatch, and
// machine-readable reports.

#include "folia/folia.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <future>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace folia;

namespace {

constexpr int kExitOk = 0;         // definite success
constexpr int kExitNegative = 1;   // definite negative verdict
constexpr int kExitError = 2;      // errors
constexpr int kExitUndecided = 3;  // undecided

struct Outcome {
    int exit_code = kExitOk;
    json result = json::object();
    std::vector<std::string> flags;
    std::string human;
};

struct Options {
    std::vector<std::string> params;
    std::vector<std::string> constraints;
    std::string map_text, form_text, point_text = "0,0", chart = "z", case_id, matrix;
    int d = 2, p = 1, q = 2, delta = 0, l = 0;
    long long k = 2, m = 1, n = 1;
    int depth_cap = 8, jobs = 1;
    bool json_out = false;
};

EvalEnv make_env(const Options& o) {
    EvalEnv env;
    for (auto& spec : o.params) {
        std::stringstream ss(spec);
        std::string name;
        while (std::getline(ss, name, ','))
            if (!name.empty()) env.declare(name);
    }
    return env;
}

ConstraintSet make_constraints(const Options& o, const EvalEnv& env) {
    ConstraintSet cs;
    for (auto& c : o.constraints) cs.add(parse_constraint(c, env));
    return cs;
}

AffineForm affine_form_input(const Options& o, const EvalEnv& env) {
    try {
        return parse_affine_form(o.form_text, env);
    } catch (const Error&) {
        Chart chart = o.chart == "x" ? Chart::X : o.chart == "y" ? Chart::Y : Chart::Z;
        return dehomogenize(parse_proj_form(o.form_text, env), chart);
    }
}

void holomorphy_flags(const ProjMap& phi, std::vector<std::string>& flags) {
    HolomorphyReport rep = is_holomorphic(phi);
    if (rep.verdict == Holomorphy::NotHolomorphic)
        flags.push_back("map has base points: behavior at indeterminacy points is not certified");
    else if (rep.verdict == Holomorphy::Undecided)
        flags.push_back("holomorphy undecided within the elimination cap");
}

void constraint_flags(const ConstraintSet& cs, std::vector<std::string>& flags) {
    if (cs.generators().size() > 1)
        flags.push_back("multiple constraint generators: reduction is best-effort, not canonical");
}

AffinePoint parse_point(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw Error("--point expects \"a,b\"");
    return AffinePoint{Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

json divisor_json(const Divisor& d) {
    json arr = json::array();
    for (auto& [c, m] : d.components()) arr.push_back({{"component", c.str()}, {"multiplicity", m}});
    return arr;
}

std::string verdict_str(ReducedVerdict v) {
    switch (v) {
        case ReducedVerdict::Reduced: return "reduced";
        case ReducedVerdict::NotReduced: return "not_reduced";
        default: return "undecidable_symbolic";
    }
}

ProjMap proj_map_of(const Options& o, const EvalEnv& env) {
    auto m = parse_map(o.map_text, env);
    if (!std::holds_alternative<ProjMap>(m)) throw Error("this command needs a projective map [P:Q:R]");
    return std::get<ProjMap>(m);
}

Outcome run_degree(const Options& o, const EvalEnv& env) {
    Outcome out;
    ProjForm w = parse_proj_form(o.form_text, env);
    int deg = foliation_degree(w);
    out.result = {{"degree", deg}, {"form", w.str()}, {"coefficient_degree", w.coeff_degree()}};
    out.human = "degree " + std::to_string(deg) + " (primitive form " + w.str() + ")";
    return out;
}

Outcome run_pullback(const Options& o, const EvalEnv& env) {
    Outcome out;
    ProjForm w = parse_proj_form(o.form_text, env);
    ProjMap phi = proj_map_of(o, env);
    holomorphy_flags(phi, out.flags);
    PullbackResult pb = pullback_form(phi, w);
    out.result = {{"primitive", pb.primitive.str()},
                  {"content", pb.content.str()},
                  {"primitive_degree", foliation_degree(pb.primitive)}};
    out.human = "pullback primitive: " + pb.primitive.str() + "\ncontent: " + pb.content.str();
    return out;
}

Outcome run_invariant(const Options& o, const EvalEnv& env, const ConstraintSet& cs) {
    Outcome out;
    ProjForm w = parse_proj_form(o.form_text, env);
    ProjMap phi = proj_map_of(o, env);
    InvarianceReport rep = invariance_check(phi, w, cs);
    out.exit_code = rep.invariant ? kExitOk : kExitNegative;
    out.flags = rep.flags;
    holomorphy_flags(phi, out.flags);
    constraint_flags(cs, out.flags);
    json res = {{"invariant", rep.invariant}};
    if (rep.cofactor) res["cofactor"] = rep.cofactor->str();
    json resid = json::array();
    for (auto& r : rep.residual) resid.push_back(r.str());
    res["residual"] = resid;
    out.result = res;
    out.human = rep.invariant ? "invariant; cofactor " + (rep.cofactor ? rep.cofactor->str() : "?")
                              : "not invariant; residual " + rep.residual[0].str() + ", " +
                                    rep.residual[1].str() + ", " + rep.residual[2].str();
    return out;
}

Outcome run_affine_invariant(const Options& o, const EvalEnv& env, const ConstraintSet& cs) {
    Outcome out;
    AffineForm w = parse_affine_form(o.form_text, env);
    AffineMap phi = std::get<AffineMap>(parse_map(o.map_text, env));
    AffineInvarianceReport rep = affine_invariance_check(phi, w, cs);
    out.exit_code = rep.invariant ? kExitOk : kExitNegative;
    out.flags = rep.flags;
    out.result = {{"invariant", rep.invariant}, {"residual", rep.residual.str()}};
    if (rep.cofactor) out.result["cofactor"] = rep.cofactor->str();
    out.human = rep.invariant ? "invariant; cofactor " + (rep.cofactor ? rep.cofactor->str() : "?")
                              : "not invariant; residual " + rep.residual.str();
    return out;
}

Outcome run_jacobian(const Options& o, const EvalEnv& env) {
    Outcome out;
    ProjMap phi = proj_map_of(o, env);
    Poly j = jacobian_determinant(phi);
    out.result = {{"jacobian", j.str()}, {"degree", j.total_degree()}};
    out.human = "jacobian determinant: " + j.str();
    return out;
}

Outcome run_critical(const Options& o, const EvalEnv& env) {
    Outcome out;
    ProjMap phi = proj_map_of(o, env);
    DivisorFactorization f = critical_divisor(phi);
    out.result = {{"critical_divisor", divisor_json(f.divisor)}, {"complete", f.complete}};
    if (!f.complete) {
        out.flags.push_back("factorization cap exceeded; partial result");
        out.exit_code = kExitUndecided;
    }
    out.human = "critical divisor: " + f.divisor.str();
    return out;
}

Outcome run_propvar(const Options& o, const EvalEnv& env, const ConstraintSet& cs) {
    Outcome out;
    ProjForm w = parse_proj_form(o.form_text, env);
    ProjMap phi = proj_map_of(o, env);
    PullbackDivisorReport rep = divisor_identity_report(phi, w, cs);
    out.flags = rep.flags;
    holomorphy_flags(phi, out.flags);
    json comps = json::array();
    for (auto& c : rep.components)
        comps.push_back({{"component", c.component.str()},
                         {"ord_critical", c.ord_critical},
                         {"ord_difference", c.ord_difference},
                         {"invariant", c.invariant},
                         {"contracted", c.contracted},
                         {"hypothesis_verified", c.hypothesis_verified},
                         {"status", c.status}});
    out.result = {{"content_divisor", divisor_json(rep.content_divisor)},
                  {"critical_divisor", divisor_json(rep.critical_divisor)},
                  {"difference", divisor_json(rep.difference)},
                  {"degree_identity", rep.degree_identity},
                  {"effective", rep.effective},
                  {"map_degree", rep.map_degree},
                  {"foliation_degree", rep.target_degree},
                  {"pullback_degree", rep.source_degree},
                  {"components", comps},
                  {"all_ok", rep.all_ok}};
    bool unverified = false;
    for (auto& c : rep.components) unverified = unverified || !c.hypothesis_verified;
    out.exit_code = rep.all_ok ? (unverified ? kExitUndecided : kExitOk) : kExitNegative;
    std::ostringstream os;
    os << "D0 = " << rep.content_divisor.str() << "\n";
    os << "critical = " << rep.critical_divisor.str() << "\n";
    os << "D = " << rep.difference.str() << (rep.effective ? " (effective)" : " (not effective)") << "\n";
    os << "degree identity: deg D = " << rep.difference.degree() << " = (e'-1) - d(e-1) = "
       << (rep.source_degree - 1) - rep.map_degree * (rep.target_degree - 1)
       << (rep.degree_identity ? " [ok]" : " [FAIL]");
    for (auto& c : rep.components)
        os << "\n  " << c.component.str() << ": " << c.status;
    out.human = os.str();
    return out;
}

Outcome run_singular(const Options& o, const EvalEnv& env) {
    Outcome out;
    ProjForm w = parse_proj_form(o.form_text, env);
    SingularLocus sl = singular_locus(w);
    json pts = json::array();
    for (auto& p : sl.points) pts.push_back(p.str());
    json uns = json::array();
    for (auto& [chart, g] : sl.unsolved) uns.push_back({{"chart", chart}, {"generator", g.str()}});
    out.result = {{"points", pts}, {"unsolved", uns}, {"complete", sl.complete}};
    if (!sl.complete) {
        out.flags.push_back("non-rational singular points remain as generators");
        out.exit_code = kExitUndecided;
    }
    std::ostringstream os;
    os << "singular points:";
    for (auto& p : sl.points) os << " " << p.str();
    if (!sl.complete) os << " (plus unsolved generators)";
    out.human = os.str();
    return out;
}

Outcome run_reduce_check(const Options& o, const EvalEnv& env, const ConstraintSet& cs) {
    Outcome out;
    AffineForm w = affine_form_input(o, env);
    AffinePoint p = parse_point(o.point_text);
    LocalModel m = LocalModel::at(w, p);
    if (!m.is_singular()) throw Error("not a singular point");
    ReducedReport rep = is_reduced(m, cs);
    out.result = {{"verdict", verdict_str(rep.verdict)},
                  {"linear_part", rep.linear.str()},
                  {"trace", rep.trace.str()},
                  {"det", rep.det.str()},
                  {"note", rep.note}};
    out.exit_code = rep.verdict == ReducedVerdict::Reduced
                        ? kExitOk
                        : rep.verdict == ReducedVerdict::NotReduced ? kExitNegative : kExitUndecided;
    out.human = "verdict: " + verdict_str(rep.verdict) + (rep.note.empty() ? "" : " (" + rep.note + ")");
    return out;
}

Outcome run_blowup(const Options& o, const EvalEnv& env) {
    Outcome out;
    AffineForm w = affine_form_input(o, env);
    AffinePoint p = parse_point(o.point_text);
    auto [u, v] = blowup_point(w, p);
    auto chart_json = [](const BlowupChart& c) {
        return json{{"chart", c.label()},
                    {"primitive", c.primitive.str()},
                    {"exceptional_multiplicity", c.exc_multiplicity},
                    {"exceptional_invariant", c.exceptional_invariant}};
    };
    out.result = {{"u_chart", chart_json(u)}, {"v_chart", chart_json(v)},
                  {"dicritical", !u.exceptional_invariant}};
    std::ostringstream os;
    os << "u-chart: " << u.primitive.str() << "  m=" << u.exc_multiplicity
       << (u.exceptional_invariant ? "  E invariant" : "  E transverse") << "\n";
    os << "v-chart: " << v.primitive.str() << "  m=" << v.exc_multiplicity
       << (v.exceptional_invariant ? "  E invariant" : "  E transverse");
    out.human = os.str();
    return out;
}

Outcome run_seidenberg(const Options& o, const EvalEnv& env, const ConstraintSet& cs) {
    Outcome out;
    AffineForm w = affine_form_input(o, env);
    AffinePoint p = parse_point(o.point_text);
    ReductionTree tree = seidenberg_reduce(w, p, o.depth_cap, cs);
    json log = json::array();
    for (auto& e : tree.log) log.push_back({{"depth", e.depth}, {"where", e.where}, {"action", e.action}});
    out.result = {{"blowups", tree.blowups},
                  {"fully_reduced", tree.fully_reduced},
                  {"cap_exceeded", tree.cap_exceeded},
                  {"log", log}};
    out.flags = tree.flags;
    out.exit_code = tree.fully_reduced ? kExitOk : kExitUndecided;
    std::ostringstream os;
    os << "blowups: " << tree.blowups << (tree.fully_reduced ? "  fully reduced" : "  NOT fully reduced");
    for (auto& e : tree.log) os << "\n  depth " << e.depth << " " << e.where << ": " << e.action;
    out.human = os.str();
    return out;
}

json plane_pair_json(const PlanePair& pp) {
    json j = {{"family", pp.family}, {"map", pp.map.str()}, {"form", pp.form.str()}};
    json cons = json::array();
    for (auto& c : pp.constraints.generators()) cons.push_back(c.gen.str());
    j["constraints"] = cons;
    j["side_conditions"] = pp.side_conditions;
    return j;
}

Outcome run_catalog(const Options& o, const EvalEnv& env) {
    Outcome out;
    if (o.case_id == "all") {
        std::vector<PlanePair> grid = plane_catalog_grid();
        json items = json::array();
        std::vector<std::future<std::pair<bool, std::string>>> futs;
        unsigned jobs = std::max(1, o.jobs);
        auto check = [](const PlanePair& pp) {
            InvarianceReport rep = invariance_check(pp.map, pp.form, pp.constraints);
            std::string cof = rep.cofactor ? rep.cofactor->str() : "?";
            return std::make_pair(rep.invariant, cof);
        };
        std::vector<std::pair<bool, std::string>> results(grid.size());
        size_t idx = 0;
        while (idx < grid.size()) {
            size_t batch = std::min((size_t)jobs, grid.size() - idx);
            futs.clear();
            for (size_t i = 0; i < batch; ++i)
                futs.push_back(std::async(std::launch::async, check, grid[idx + i]));
            for (size_t i = 0; i < batch; ++i) results[idx + i] = futs[i].get();
            idx += batch;
        }
        bool all = true;
        std::ostringstream os;
        for (size_t i = 0; i < grid.size(); ++i) {
            auto& [inv, cof] = results[i];
            all = all && inv;
            items.push_back({{"family", grid[i].family}, {"degree", grid[i].map.degree()},
                             {"invariant", inv}, {"cofactor", cof}});
            os << grid[i].family << " d=" << grid[i].map.degree() << " "
               << (inv ? "invariant, cofactor " + cof : "NOT INVARIANT") << "\n";
        }
        out.result = {{"grid", items}, {"all_invariant", all}};
        out.exit_code = all ? kExitOk : kExitNegative;
        out.human = os.str() + (all ? "all pairs certified invariant" : "FAILURES present");
        return out;
    }
    if (o.case_id == "k0-4") {
        AffinePair pp = make_power_shear_pair(o.k);
        AffineInvarianceReport rep = affine_invariance_check(pp.map, pp.form, pp.constraints);
        out.result = {{"family", pp.family}, {"map", pp.map.str()}, {"form", pp.form.str()},
                      {"invariant", rep.invariant}, {"cofactor", rep.cofactor ? rep.cofactor->str() : "?"},
                      {"side_conditions", pp.side_conditions}};
        out.exit_code = rep.invariant ? kExitOk : kExitNegative;
        out.human = pp.family + ": " + pp.map.str() + " with " + pp.form.str() +
                    (rep.invariant ? " invariant, cofactor " + rep.cofactor->str() : " NOT invariant");
        return out;
    }
    if (o.case_id == "k0-5") {
        long long a, b, c, d;
        if (sscanf(o.matrix.c_str(), "%lld,%lld,%lld,%lld", &a, &b, &c, &d) != 4)
            throw Error("--matrix expects a,b,c,d");
        AffinePair pp = make_toric_log_pair(a, b, c, d);
        AffineInvarianceReport rep = affine_invariance_check(pp.map, pp.form, pp.constraints);
        out.result = {{"family", pp.family}, {"map", pp.map.str()}, {"form", pp.form.str()},
                      {"invariant", rep.invariant}, {"side_conditions", pp.side_conditions}};
        if (rep.cofactor) out.result["cofactor"] = rep.cofactor->str();
        out.exit_code = rep.invariant ? kExitOk : kExitNegative;
        out.human = pp.family + ": " + pp.map.str() + " with " + pp.form.str() +
                    (rep.invariant ? " invariant" : " not invariant for generic parameters");
        return out;
    }
    if (o.case_id == "k1-1") {
        AffinePair pp = make_riccati_power_pair(o.k, o.m, o.n);
        AffineInvarianceReport rep = affine_invariance_check(pp.map, pp.form, pp.constraints);
        json cons = json::array();
        for (auto& c : pp.constraints.generators()) cons.push_back(c.gen.str());
        out.result = {{"family", pp.family}, {"map", pp.map.str()}, {"form", pp.form.str()},
                      {"invariant", rep.invariant}, {"constraints", cons},
                      {"side_conditions", pp.side_conditions}};
        if (rep.cofactor) out.result["cofactor"] = rep.cofactor->str();
        out.exit_code = rep.invariant ? kExitOk : kExitNegative;
        out.human = pp.family + ": " + pp.map.str() + " with " + pp.form.str() +
                    (rep.invariant ? " invariant, cofactor " + rep.cofactor->str() : " NOT invariant");
        return out;
    }
    int case_num = std::stoi(o.case_id);
    PlaneCaseParams prm;
    prm.d = o.d;
    prm.p = o.p;
    prm.q = o.q;
    prm.l = o.l;
    if (o.delta != 0) {
        int span = case_num == 4 ? o.p + o.q : 2;
        if (o.delta + o.l * span != o.d)
            throw Error("inconsistent --delta: d = delta + l*" + std::to_string(span) + " fails");
    }
    if (!o.map_text.empty() && case_num == 1) {
        ProjMap user = proj_map_of(o, env);
        prm.P = user.p();
        prm.Q = user.q();
        prm.R = user.r();
        prm.d = user.degree();
    }
    PlanePair pp = make_plane_case(case_num, prm);
    InvarianceReport rep = invariance_check(pp.map, pp.form, pp.constraints);
    out.result = plane_pair_json(pp);
    out.result["invariant"] = rep.invariant;
    if (rep.cofactor) out.result["cofactor"] = rep.cofactor->str();
    out.exit_code = rep.invariant ? kExitOk : kExitNegative;
    out.human = pp.family + ": " + pp.map.str() + "\nform: " + pp.form.str() +
                (rep.invariant ? "\ninvariant, cofactor " + (rep.cofactor ? rep.cofactor->str() : "?")
                               : "\nNOT invariant");
    return out;
}

Outcome run_second_foliation(const Options& o) {
    Outcome out;
    long long a, b, c, d;
    if (sscanf(o.matrix.c_str(), "%lld,%lld,%lld,%lld", &a, &b, &c, &d) != 4)
        throw Error("--matrix expects a,b,c,d");
    SecondFoliations sf = second_foliations(a, b, c, d);
    json forms = json::array();
    for (size_t i = 0; i < sf.forms.size(); ++i)
        forms.push_back({{"form", sf.forms[i].str()}, {"cofactor", sf.eigenvalues[i].str()}});
    json cons = json::array();
    for (auto& cc : sf.constraints.generators()) cons.push_back(cc.gen.str());
    out.result = {{"foliations", forms},
                  {"constraints", cons},
                  {"conjugate_pair", sf.conjugate_pair},
                  {"scalar_matrix", sf.scalar_matrix},
                  {"non_diagonalizable", sf.non_diagonalizable}};
    out.flags = sf.notes;
    std::ostringstream os;
    for (size_t i = 0; i < sf.forms.size(); ++i)
        os << sf.forms[i].str() << "  (cofactor " << sf.eigenvalues[i].str() << ")\n";
    for (auto& n : sf.notes) os << n << "\n";
    out.human = os.str();
    if (!out.human.empty() && out.human.back() == '\n') out.human.pop_back();
    return out;
}

Outcome run_certify(const Options& o, const EvalEnv& env, const ConstraintSet& cs) {
    Outcome out;
    ProjForm w = parse_proj_form(o.form_text, env);
    ProjMap phi = proj_map_of(o, env);
    CertifyResult res = certify_plane_case(phi, w, cs);
    out.result = {{"matched", res.matched},
                  {"case", res.case_id},
                  {"coordinate_change", res.permutation},
                  {"foliation_degree", res.foliation_deg},
                  {"degree_bound_ok", res.degree_bound_ok}};
    out.flags = res.notes;
    out.exit_code = res.matched ? kExitOk : kExitNegative;
    out.human = res.matched ? "matched case " + std::to_string(res.case_id) + " under " + res.permutation
                            : "no match under monomial coordinate changes";
    out.human += "; foliation degree " + std::to_string(res.foliation_deg);
    return out;
}

Outcome run_holomorphic(const Options& o, const EvalEnv& env) {
    Outcome out;
    ProjMap phi = proj_map_of(o, env);
    HolomorphyReport rep = is_holomorphic(phi);
    out.flags = rep.notes;
    std::string verdict = rep.verdict == Holomorphy::Holomorphic
                              ? "holomorphic"
                              : rep.verdict == Holomorphy::NotHolomorphic ? "not_holomorphic" : "undecided";
    out.result = {{"verdict", verdict}};
    if (rep.base_point) out.result["base_point"] = rep.base_point->str();
    out.exit_code = rep.verdict == Holomorphy::Holomorphic
                        ? kExitOk
                        : rep.verdict == Holomorphy::NotHolomorphic ? kExitNegative : kExitUndecided;
    out.human = verdict + (rep.base_point ? " (base point " + rep.base_point->str() + ")" : "");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for plane foliations invariant under rational maps"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--params", o.params, "comma-separated parameter names")->take_all();
    app.add_option("--constraint", o.constraints, "parameter relation, e.g. \"lambda^2 - 2\"")->take_all();
    app.add_flag("--json", o.json_out, "machine-readable output");
    app.add_option("--jobs", o.jobs, "parallel checks for catalog --case all");
    app.add_option("--depth-cap", o.depth_cap, "blow-up depth cap");

    auto add_map = [&](CLI::App* c) { c->add_option("--map", o.map_text, "map literal")->required(); };
    auto add_form = [&](CLI::App* c) { c->add_option("--form", o.form_text, "1-form literal")->required(); };
    auto add_point = [&](CLI::App* c) {
        c->add_option("--point", o.point_text, "base point \"a,b\"");
        c->add_option("--chart", o.chart, "affine chart {x, y, z} for projective input");
    };

    CLI::App* c_degree = app.add_subcommand("degree", "foliation degree of a projective form");
    add_form(c_degree);
    CLI::App* c_pullback = app.add_subcommand("pullback", "pullback of a form with content extraction");
    add_map(c_pullback);
    add_form(c_pullback);
    CLI::App* c_inv = app.add_subcommand("invariant", "invariance certificate for a pair");
    add_map(c_inv);
    add_form(c_inv);
    CLI::App* c_jac = app.add_subcommand("jacobian", "Jacobian determinant of a projective map");
    add_map(c_jac);
    CLI::App* c_crit = app.add_subcommand("critical", "critical divisor of a projective map");
    add_map(c_crit);
    CLI::App* c_propvar = app.add_subcommand("propvar", "divisor identity and order bookkeeping");
    add_map(c_propvar);
    add_form(c_propvar);
    CLI::App* c_sing = app.add_subcommand("singular", "singular locus of a projective form");
    add_form(c_sing);
    CLI::App* c_red = app.add_subcommand("reduce-check", "reducedness of an affine singularity");
    add_form(c_red);
    add_point(c_red);
    CLI::App* c_blow = app.add_subcommand("blowup", "single point blow-up, both charts");
    add_form(c_blow);
    add_point(c_blow);
    CLI::App* c_seid = app.add_subcommand("seidenberg", "iterated reduction of a singular point");
    add_form(c_seid);
    add_point(c_seid);
    CLI::App* c_cat = app.add_subcommand("catalog", "normal-form constructors and certification");
    c_cat->add_option("--case", o.case_id, "1..5, k0-4, k0-5, k1-1, or all")->required();
    c_cat->add_option("--d", o.d);
    c_cat->add_option("--p", o.p);
    c_cat->add_option("--q", o.q);
    c_cat->add_option("--delta", o.delta);
    c_cat->add_option("--l", o.l);
    c_cat->add_option("--k", o.k);
    c_cat->add_option("--m", o.m);
    c_cat->add_option("--n", o.n);
    c_cat->add_option("--matrix", o.matrix, "a,b,c,d");
    c_cat->add_option("--map", o.map_text, "case-1 map literal");
    CLI::App* c_second = app.add_subcommand("second-foliation", "invariant logarithmic foliations of a monomial map");
    c_second->add_option("--matrix", o.matrix, "a,b,c,d")->required();
    CLI::App* c_cert = app.add_subcommand("certify", "match an invariant pair against the plane catalog");
    add_map(c_cert);
    add_form(c_cert);
    CLI::App* c_hol = app.add_subcommand("holomorphic", "base-point test for a projective map");
    add_map(c_hol);

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    std::string command;
    Outcome out;
    try {
        EvalEnv env = make_env(o);
        ConstraintSet cs = make_constraints(o, env);
        if (app.got_subcommand(c_degree)) { command = "degree"; out = run_degree(o, env); }
        else if (app.got_subcommand(c_pullback)) { command = "pullback"; out = run_pullback(o, env); }
        else if (app.got_subcommand(c_inv)) {
            command = "invariant";
            bool affine = !o.map_text.empty() && o.map_text.find('[') == std::string::npos;
            out = affine ? run_affine_invariant(o, env, cs) : run_invariant(o, env, cs);
        }
        else if (app.got_subcommand(c_jac)) { command = "jacobian"; out = run_jacobian(o, env); }
        else if (app.got_subcommand(c_crit)) { command = "critical"; out = run_critical(o, env); }
        else if (app.got_subcommand(c_propvar)) { command = "propvar"; out = run_propvar(o, env, cs); }
        else if (app.got_subcommand(c_sing)) { command = "singular"; out = run_singular(o, env); }
        else if (app.got_subcommand(c_red)) { command = "reduce-check"; out = run_reduce_check(o, env, cs); }
        else if (app.got_subcommand(c_blow)) { command = "blowup"; out = run_blowup(o, env); }
        else if (app.got_subcommand(c_seid)) { command = "seidenberg"; out = run_seidenberg(o, env, cs); }
        else if (app.got_subcommand(c_cat)) { command = "catalog"; out = run_catalog(o, env); }
        else if (app.got_subcommand(c_second)) { command = "second-foliation"; out = run_second_foliation(o); }
        else if (app.got_subcommand(c_cert)) { command = "certify"; out = run_certify(o, env, cs); }
        else if (app.got_subcommand(c_hol)) { command = "holomorphic"; out = run_holomorphic(o, env); }
    } catch (const std::exception& e) {
        if (o.json_out) {
            json j = {{"command", command}, {"error", e.what()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return kExitError;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    if (o.json_out) {
        json inputs = json::object();
        if (!o.map_text.empty()) inputs["map"] = o.map_text;
        if (!o.form_text.empty()) inputs["form"] = o.form_text;
        if (!o.matrix.empty()) inputs["matrix"] = o.matrix;
        if (!o.case_id.empty()) inputs["case"] = o.case_id;
        json j = {{"command", command},
                  {"inputs", inputs},
                  {"result", out.result},
                  {"constraints_used", o.constraints},
                  {"flags", out.flags},
                  {"timing_ms", (long long)elapsed}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << out.human << "\n";
        for (auto& f : out.flags) std::cout << "flag: " << f << "\n";
    }
    return out.exit_code;
}
