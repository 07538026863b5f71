// Structured verification reports shared by every suite and the CLI.

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "element.hpp"
#include "tensor.hpp"

namespace qplane {

enum class TwistFlag { auto_resolve, on, off };

inline const char* to_string(TwistFlag t) {
    switch (t) {
        case TwistFlag::on: return "on";
        case TwistFlag::off: return "off";
        default: return "auto";
    }
}

/// Engine-wide knobs, echoed into every report.
struct EngineConfig {
    QMode mode = QMode::specialized;
    int max_degree = 8;
    int window = 4;
    TwistFlag twist = TwistFlag::auto_resolve;
    uint64_t seed = 0;

    /// The graded-braiding convention the omega co-structures run under.
    /// "auto" resolves to the twisted rule there, the only choice under which
    /// the omega Hopf axioms close (see README); elsewhere grading is trivial
    /// and the flag is inert.
    TensorTwist omega_twist() const {
        if (twist == TwistFlag::on) return TensorTwist::on;
        if (twist == TwistFlag::off) return TensorTwist::off;
        return TensorTwist::on;
    }
};

struct ReportItem {
    std::string id;
    std::string paper_eq;
    bool pass = false;
    std::string residual;  // rendering of the defect; "0" when the check holds exactly
};

struct Report {
    std::string suite;
    EngineConfig config;
    std::vector<ReportItem> items;

    int pass_count() const {
        int n = 0;
        for (const auto& it : items) n += it.pass;
        return n;
    }
    int fail_count() const { return static_cast<int>(items.size()) - pass_count(); }
    bool all_pass() const { return fail_count() == 0; }

    void check_zero(const std::string& id, const std::string& eq, const Element& residual) {
        items.push_back({id, eq, residual.is_zero(), residual.is_zero() ? "0" : residual.to_string()});
    }
    void check_zero(const std::string& id, const std::string& eq, const TensorElement& residual) {
        items.push_back({id, eq, residual.is_zero(), residual.is_zero() ? "0" : residual.to_string()});
    }
    void check_zero(const std::string& id, const std::string& eq, const Scalar& residual) {
        items.push_back({id, eq, residual.is_zero(), residual.is_zero() ? "0" : residual.to_string()});
    }
    void check_true(const std::string& id, const std::string& eq, bool ok, const std::string& note = "") {
        items.push_back({id, eq, ok, ok ? (note.empty() ? "0" : note) : (note.empty() ? "failed" : note)});
    }

    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& it : other.items)
            items.push_back({prefix.empty() ? it.id : prefix + "." + it.id, it.paper_eq, it.pass, it.residual});
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["config"] = {{"q_mode", qplane::to_string(config.mode)},
                       {"max_degree", config.max_degree},
                       {"window", config.window},
                       {"tensor_twist", qplane::to_string(config.twist)},
                       {"seed", config.seed}};
        j["items"] = nlohmann::json::array();
        for (const auto& it : items)
            j["items"].push_back({{"id", it.id},
                                  {"paper_eq", it.paper_eq},
                                  {"status", it.pass ? "pass" : "fail"},
                                  {"residual", it.residual}});
        j["summary"] = {{"pass", pass_count()}, {"fail", fail_count()}};
        return j;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "suite " << suite << " (q-mode " << qplane::to_string(config.mode) << ", max-degree "
           << config.max_degree << ", window " << config.window << ", tensor-twist "
           << qplane::to_string(config.twist) << ", seed " << config.seed << ")\n";
        for (const auto& it : items) {
            os << "  [" << (it.pass ? "pass" : "FAIL") << "] " << it.id;
            if (!it.paper_eq.empty()) os << " (eq " << it.paper_eq << ")";
            if (!it.pass) os << "  residual: " << it.residual;
            os << "\n";
        }
        os << "  " << pass_count() << " passed, " << fail_count() << " failed\n";
        return os.str();
    }
};

}  // namespace qplane
