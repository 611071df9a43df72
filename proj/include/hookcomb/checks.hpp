#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "constraint_class.hpp"
#include "identities.hpp"

namespace hookcomb {

/// Depth overrides for a verification run. Unset fields use the check's
/// default; fields a check does not take are ignored.
struct CheckOptions {
    std::optional<Part> max_n;
    std::optional<Part> max_size;
    std::optional<Part> d;
    std::optional<int> qbound;
    std::optional<ConstraintClass> cls;
};

struct CheckInfo {
    std::string id;
    std::string summary;
    std::function<std::vector<TheoremReport>(const CheckOptions&)> run;
};

inline constexpr const char* kQboundEnvVar = "HOOKCOMB_QBOUND_DEFAULT";

/// Default truncation for series checks: HOOKCOMB_QBOUND_DEFAULT when set to
/// a positive integer, else `fallback`. Malformed values are rejected.
inline int default_qbound(int fallback) {
    const char* env = std::getenv(kQboundEnvVar);
    if (!env || !*env) return fallback;
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string(env).size() || v < 1)
        throw std::invalid_argument(std::string(kQboundEnvVar) + " must be a positive integer");
    return v;
}

/// Classes covered by gf-coefficients when no class is given.
inline std::vector<ConstraintClass> gf_check_classes() {
    std::vector<ConstraintClass> out = {ConstraintClass::any(), ConstraintClass::distinct(), ConstraintClass::odd()};
    for (Part d = 1; d <= 5; ++d) {
        out.push_back(ConstraintClass::d_distinct(d));
        out.push_back(ConstraintClass::mod_one(d));
        out.push_back(ConstraintClass::g_class(d));
    }
    return out;
}

/// Every check, sorted by id.
inline const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> registry = [] {
        auto one = [](TheoremReport r) { return std::vector<TheoremReport>{std::move(r)}; };
        std::vector<CheckInfo> v = {
            {"andrews-identity", "A = B = C, B also via Franklin cancellation (qbound 15)",
             [one](const CheckOptions& o) { return one(verify_andrews_identity(o.qbound.value_or(default_qbound(15)))); }},
            {"congruences", "h_D, h_DE, h_DO congruences (max-n 60)",
             [one](const CheckOptions& o) { return one(verify_congruences(o.max_n.value_or(60))); }},
            {"d-chain", "h_d = f_d = g_d for d = 1..5 (max-n 18)",
             [](const CheckOptions& o) {
                 std::vector<TheoremReport> out;
                 const Part n = o.max_n.value_or(18);
                 if (o.d) out.push_back(verify_d_chain(*o.d, n));
                 else
                     for (Part d = 1; d <= 5; ++d) out.push_back(verify_d_chain(d, n));
                 return out;
             }},
            {"euler-analogue", "distinct and odd partitions of perimeter n number F(n) (max-n 25)",
             [one](const CheckOptions& o) { return one(verify_euler_analogue(o.max_n.value_or(25))); }},
            {"fibonacci-identities", "addition formula to max-n/2, divisibility to max-n (max-n 60)",
             [one](const CheckOptions& o) {
                 const Part n = o.max_n.value_or(60);
                 return one(verify_fibonacci_identities(std::max<Part>(1, n / 2), n));
             }},
            {"franklin", "Franklin's involution on distinct partitions (max-size 40)",
             [one](const CheckOptions& o) { return one(verify_franklin(o.max_size.value_or(40))); }},
            {"gf-coefficients", "closed generating functions vs enumeration, every class (qbound 12)",
             [](const CheckOptions& o) {
                 std::vector<TheoremReport> out;
                 const int q = o.qbound.value_or(default_qbound(12));
                 if (o.cls) out.push_back(verify_gf_coefficients(*o.cls, q));
                 else
                     for (const auto& c : gf_check_classes()) out.push_back(verify_gf_coefficients(c, q));
                 return out;
             }},
            {"pentagonal-analogue", "e(n) by five routes (max-n 30)",
             [one](const CheckOptions& o) { return one(verify_pentagonal_analogue(o.max_n.value_or(30))); }},
            {"refined-identity", "x,y-refined identity L = M = R and its reductions (qbound 15)",
             [one](const CheckOptions& o) { return one(verify_refined_identity(o.qbound.value_or(default_qbound(15)))); }},
            {"refinements", "three distinct/odd refinements with binomial counts (max-n 14)",
             [one](const CheckOptions& o) { return one(verify_refinements(o.max_n.value_or(14))); }},
            {"rogers-fine", "Rogers-Fine identity at alpha=aq, beta=bq, tau=btq (qbound 10)",
             [one](const CheckOptions& o) { return one(verify_rogers_fine(o.qbound.value_or(default_qbound(10)))); }},
            {"unrestricted-count", "h(n) = 2^(n-1) with profile round trips (max-n 16)",
             [one](const CheckOptions& o) { return one(verify_unrestricted_count(o.max_n.value_or(16))); }},
        };
        std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return l.id < r.id; });
        return v;
    }();
    return registry;
}

inline const CheckInfo* find_check(const std::string& id) {
    for (const auto& c : check_registry())
        if (c.id == id) return &c;
    return nullptr;
}

/// Runs one check id, or every check for "all". Throws invalid_argument on an
/// unknown id.
inline std::vector<TheoremReport> run_checks(const std::string& id, const CheckOptions& opts = {}) {
    std::vector<TheoremReport> out;
    for (const auto& c : check_registry()) {
        if (id != "all" && c.id != id) continue;
        auto reports = c.run(opts);
        out.insert(out.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
    }
    if (out.empty()) throw std::invalid_argument("unknown check id: " + id);
    return out;
}

}  // namespace hookcomb
