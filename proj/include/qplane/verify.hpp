// Suite registry: maps CLI suite names onto the module checks.

#pragma once

#include "coaction.hpp"
#include "dual.hpp"
#include "lie.hpp"
#include "solve.hpp"

namespace qplane {

/// Critical pairs, cap overlaps, and strategy agreement for one system.
inline void confluence_items(Report& rep, const RewriteSystem& sys, int strategy_len) {
    auto res = sys.check_local_confluence(strategy_len);
    int cp = 0, cap = 0, strat = 0;
    std::string first;
    for (const auto& is : res.issues) {
        if (is.kind == "critical-pair") ++cp;
        else if (is.kind == "cap-overlap") ++cap;
        else ++strat;
        if (first.empty()) first = is.to_string();
    }
    rep.check_true("critical-pairs." + sys.name(), "", cp + cap == 0,
                   cp + cap == 0 ? std::to_string(res.pairs_checked) + " overlaps joined" : first);
    rep.check_true("strategy-agreement." + sys.name(), "", strat == 0,
                   strat == 0 ? std::to_string(res.words_checked) + " words, leftmost = rightmost" : first);
    rep.check_true("relations-sound." + sys.name(), "", sys.relations_sound());
}

inline Report suite_confluence(const EngineConfig& cfg) {
    Report rep;
    rep.suite = "confluence";
    rep.config = cfg;
    int len = std::min(cfg.max_degree, 6);
    confluence_items(rep, build_main_system(cfg.mode), len);
    confluence_items(rep, build_omega_system(cfg.mode), len);
    confluence_items(rep, build_operator_system(cfg.mode), len);
    confluence_items(rep, build_dual_system(cfg.mode), len);
    confluence_items(rep, build_partial_system(cfg.mode), len);
    return rep;
}

inline Report suite_hopf(const EngineConfig& cfg) {
    Report rep;
    rep.suite = "hopf";
    rep.config = cfg;
    RewriteSystem mainS = build_main_system(cfg.mode);
    RewriteSystem omegaS = build_omega_system(cfg.mode);
    Costructure coA = costructure_coordinates(&mainS);
    Costructure coO = costructure_omega(&omegaS, cfg.omega_twist());
    rep.merge(hopf_axiom_check(coA, cfg.window, cfg), "A");
    rep.merge(hopf_axiom_check(coO, cfg.window, cfg), "Omega");

    // the compatibility called out in the text: Delta(x theta) = q^-1 Delta(theta x)
    Element xt = Element::word(Word{Gen::x, Gen::theta});
    Element tx = Element::word(Word{Gen::theta, Gen::x}, Scalar::q_power(cfg.mode, -1));
    rep.check_zero("Omega.x-theta-compat", "43", coO.delta(xt) - coO.delta(tx));
    return rep;
}

inline Report suite_cartan_maurer_all(const EngineConfig& cfg) {
    Report rep;
    rep.suite = "cartan-maurer";
    rep.config = cfg;
    rep.merge(suite_omega(cfg), "forms");
    rep.merge(suite_cartan_maurer(cfg), "two-forms");
    return rep;
}

inline Report suite_solve(const EngineConfig& cfg) {
    Report rep = solve_coefficients().report;
    rep.config = cfg;
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "calculus",    "confluence",       "covariance", "hopf", "cartan-maurer", "lie",
        "d-decomposition", "operator-hopf", "duality",    "iso",  "complex",       "solve-coefficients"};
    return names;
}

inline Report run_suite(const std::string& name, const EngineConfig& cfg) {
    if (name == "calculus") return suite_calculus(cfg);
    if (name == "confluence") return suite_confluence(cfg);
    if (name == "covariance") return covariance_suite(cfg);
    if (name == "hopf") return suite_hopf(cfg);
    if (name == "cartan-maurer") return suite_cartan_maurer_all(cfg);
    if (name == "lie") return suite_lie(cfg);
    if (name == "d-decomposition") return suite_d_decomposition(cfg);
    if (name == "operator-hopf") return suite_operator_hopf(cfg);
    if (name == "duality") return suite_duality(cfg);
    if (name == "iso") return check_iso(cfg);
    if (name == "complex") return suite_complex(cfg);
    if (name == "solve-coefficients") return suite_solve(cfg);
    throw AlgebraError("unknown suite: " + name);
}

inline std::vector<Report> run_all_suites(const EngineConfig& cfg) {
    std::vector<Report> out;
    for (const std::string& n : suite_names()) out.push_back(run_suite(n, cfg));
    return out;
}

}  // namespace qplane
