#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qszego/rational.hpp"
#include "qszego/verify.hpp"

namespace qszego {

// ---------------------------------------------------------------------------
// Machine-readable run reports. Every CLI invocation emits one RunReport,
// either as JSON (schema/runreport.schema.json, versioned) or as plain text.
// Exact rational values are serialized as strings so they round-trip without
// loss; floats ride alongside for convenience.
// ---------------------------------------------------------------------------

inline constexpr const char* kReportSchemaVersion = "1.0.0";

using json = nlohmann::json;

inline json pi_scaled_to_json(const PiScaled& v) {
    return json{{"coeff", to_string(v.coeff)}, {"pi_half_exponent", v.pi_half_exponent}};
}

inline PiScaled pi_scaled_from_json(const json& j) {
    return PiScaled(BigRational(j.at("coeff").get<std::string>()),
                    j.at("pi_half_exponent").get<int>());
}

inline json quaternion_to_json(const Quaternion<double>& q) {
    return json::array({q.x1, q.x2, q.x3, q.x4});
}

inline json check_to_json(const CheckResult& c) {
    return json{{"name", c.name},
                {"passed", c.passed},
                {"measured", c.measured},
                {"threshold", c.threshold},
                {"detail", c.detail}};
}

inline json suite_to_json(const SuiteResult& s) {
    json checks = json::array();
    for (const auto& c : s.checks) checks.push_back(check_to_json(c));
    return json{{"suite", s.suite},
                {"passed", s.passed()},
                {"wall_time_seconds", s.wall_time_seconds},
                {"checks", checks}};
}

struct RunReport {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    json error_estimates = json::object();
    std::string spec_hash; // empty when the command involves no quadrature
    double wall_time_seconds = 0.0;

    json to_json() const {
        return json{{"schema_version", kReportSchemaVersion},
                    {"command", command},
                    {"inputs", inputs},
                    {"outputs", outputs},
                    {"error_estimates", error_estimates},
                    {"spec_hash", spec_hash},
                    {"wall_time_seconds", wall_time_seconds}};
    }

    static RunReport from_json(const json& j) {
        if (j.at("schema_version").get<std::string>() != kReportSchemaVersion) {
            throw RangeError("unsupported report schema version");
        }
        RunReport r;
        r.command = j.at("command").get<std::string>();
        r.inputs = j.at("inputs");
        r.outputs = j.at("outputs");
        r.error_estimates = j.at("error_estimates");
        r.spec_hash = j.at("spec_hash").get<std::string>();
        r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
        return r;
    }
};

namespace detail {

inline void render_value(std::ostream& os, const json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                           it.value().front().is_structured())) {
                os << pad << it.key() << ":\n";
                render_value(os, it.value(), indent + 2);
            } else {
                os << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (item.is_structured()) {
                os << pad << "-\n";
                render_value(os, item, indent + 2);
            } else {
                os << pad << "- " << item.dump() << "\n";
            }
        }
    } else {
        os << pad << v.dump() << "\n";
    }
}

} // namespace detail

inline std::string report_to_text(const RunReport& r) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    if (!r.inputs.empty()) {
        os << "inputs:\n";
        detail::render_value(os, r.inputs, 2);
    }
    os << "outputs:\n";
    detail::render_value(os, r.outputs, 2);
    if (!r.error_estimates.empty()) {
        os << "error estimates:\n";
        detail::render_value(os, r.error_estimates, 2);
    }
    if (!r.spec_hash.empty()) os << "spec hash: " << r.spec_hash << "\n";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", r.wall_time_seconds);
    os << "wall time: " << buf << " s\n";
    return os.str();
}

// Renders a suite result as the human-readable check list used by --text.
inline std::string suite_to_text(const SuiteResult& s) {
    std::ostringstream os;
    for (const auto& c : s.checks) {
        os << (c.passed ? "  [ok]   " : "  [FAIL] ") << c.name;
        if (c.threshold > 0.0) {
            char buf[80];
            std::snprintf(buf, sizeof(buf), "  (measured %.3g, bound %.3g)", c.measured,
                          c.threshold);
            os << buf;
        }
        os << "\n";
        if (!c.detail.empty()) os << "         " << c.detail << "\n";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "suite %s: %s in %.2f s\n", s.suite.c_str(),
                  s.passed() ? "PASSED" : "FAILED", s.wall_time_seconds);
    os << buf;
    return os.str();
}

} // namespace qszego
