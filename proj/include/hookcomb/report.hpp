#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "bigint.hpp"
#include "partition.hpp"
#include "series.hpp"

namespace hookcomb {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

/// {"variables": "xyq", "qbound": n, "terms": [{"coefficient": "1", "exponents": {...}}]}
/// Coefficients are decimal strings; exponents list the declared variables
/// in print order.
inline Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json ex = Json::object();
        for (Var v : kPrintOrder)
            if (p.vars().contains(v)) ex[std::string(1, var_name(v))] = degree(e, v);
        terms.push_back({{"coefficient", c.str()}, {"exponents", std::move(ex)}});
    }
    Json out = {{"variables", p.vars().str()}};
    if (p.qbound() == kUnbounded) out["qbound"] = nullptr;
    else out["qbound"] = p.qbound();
    out["terms"] = std::move(terms);
    return out;
}

enum class Status { Pass, Fail };

inline const char* to_string(Status s) { return s == Status::Pass ? "pass" : "fail"; }

/// The first failing case: its inputs and the values that disagreed, keyed by
/// the route that produced them.
struct Counterexample {
    std::string what;
    Json inputs = Json::object();
    Json values = Json::object();
};

struct TheoremReport {
    std::string check_id;
    Json params = Json::object();
    Status status = Status::Pass;
    std::optional<Counterexample> counterexample;
    std::chrono::milliseconds elapsed{0};

    bool passed() const noexcept { return status == Status::Pass; }
};

/// Schema: {check_id, params, status, counterexample?, elapsed_ms}. Elapsed
/// time is null unless requested so repeated runs serialize identically.
inline Json to_json(const TheoremReport& r, bool include_elapsed = false) {
    Json j = {{"check_id", r.check_id}, {"params", r.params}, {"status", to_string(r.status)}};
    if (r.counterexample) {
        j["counterexample"] = {{"what", r.counterexample->what},
                               {"inputs", r.counterexample->inputs},
                               {"values", r.counterexample->values}};
    }
    if (include_elapsed) j["elapsed_ms"] = r.elapsed.count();
    else j["elapsed_ms"] = nullptr;
    return j;
}

/// One line per report, plus an indented counterexample on failure.
inline std::string to_text(const TheoremReport& r, bool include_elapsed = false) {
    std::ostringstream os;
    os << (r.passed() ? "PASS " : "FAIL ") << r.check_id;
    for (const auto& [k, v] : r.params.items()) os << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    if (include_elapsed) os << " (" << r.elapsed.count() << " ms)";
    if (r.counterexample) {
        os << "\n  " << r.counterexample->what << "\n  inputs: " << r.counterexample->inputs.dump()
           << "\n  values: " << r.counterexample->values.dump();
    }
    return os.str();
}

/// Accumulates one check. The first recorded failure wins; checks iterate
/// their parameters in increasing order so it is the minimal one.
class ReportBuilder {
public:
    ReportBuilder(std::string check_id, Json params)
        : start_(std::chrono::steady_clock::now()) {
        report_.check_id = std::move(check_id);
        report_.params = std::move(params);
    }

    bool failed() const noexcept { return report_.status == Status::Fail; }

    void fail(std::string what, Json inputs, Json values) {
        if (failed()) return;
        report_.status = Status::Fail;
        report_.counterexample = Counterexample{std::move(what), std::move(inputs), std::move(values)};
    }

    /// Records a failure unless a == b. Returns whether they agreed.
    template <class A, class B>
    bool expect_equal(const std::string& what, Json inputs, const std::string& name_a, const A& a,
                      const std::string& name_b, const B& b) {
        if (a == b) return true;
        fail(what, std::move(inputs), Json{{name_a, describe(a)}, {name_b, describe(b)}});
        return false;
    }

    TheoremReport finish() {
        report_.elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
        return std::move(report_);
    }

private:
    template <class T>
    static std::string describe(const T& v) {
        if constexpr (std::is_same_v<T, std::string>) return v;
        else if constexpr (std::is_same_v<T, BigInt>) return v.str();
        else if constexpr (std::is_arithmetic_v<T>) return std::to_string(v);
        else return to_string(v);
    }

    TheoremReport report_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace hookcomb
