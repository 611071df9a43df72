#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "partition.hpp"

namespace hookcomb {

/// Enumeration class tag. Distinct behaves as DDistinct(1) and Odd as
/// ModOne(1); the tags stay separate so output names round-trip.
class ConstraintClass {
public:
    enum class Kind { Unrestricted, Distinct, Odd, DDistinct, ModOne, GClass };

    static ConstraintClass any() { return {Kind::Unrestricted, 1}; }
    static ConstraintClass distinct() { return {Kind::Distinct, 1}; }
    static ConstraintClass odd() { return {Kind::Odd, 1}; }
    static ConstraintClass d_distinct(std::int64_t d) { return {Kind::DDistinct, checked(d)}; }
    static ConstraintClass mod_one(std::int64_t d) { return {Kind::ModOne, checked(d)}; }
    static ConstraintClass g_class(std::int64_t d) { return {Kind::GClass, checked(d)}; }

    Kind kind() const noexcept { return kind_; }
    /// Parameter d; 1 for the unparameterized tags.
    std::int64_t d() const noexcept { return d_; }
    bool parameterized() const noexcept {
        return kind_ == Kind::DDistinct || kind_ == Kind::ModOne || kind_ == Kind::GClass;
    }

    friend bool operator==(const ConstraintClass&, const ConstraintClass&) = default;

private:
    ConstraintClass(Kind kind, std::int64_t d) : kind_(kind), d_(d) {}

    static std::int64_t checked(std::int64_t d) {
        if (d < 1) throw std::invalid_argument("class parameter d must be >= 1, got " + std::to_string(d));
        return d;
    }

    Kind kind_;
    std::int64_t d_;
};

/// Class-spec text: any | distinct | odd | ddistinct:<d> | modone:<d> | gclass:<d>
inline std::string to_string(const ConstraintClass& c) {
    using K = ConstraintClass::Kind;
    switch (c.kind()) {
    case K::Unrestricted: return "any";
    case K::Distinct: return "distinct";
    case K::Odd: return "odd";
    case K::DDistinct: return "ddistinct:" + std::to_string(c.d());
    case K::ModOne: return "modone:" + std::to_string(c.d());
    case K::GClass: return "gclass:" + std::to_string(c.d());
    }
    return "?";
}

inline ConstraintClass parse_class_spec(std::string_view spec) {
    if (spec == "any") return ConstraintClass::any();
    if (spec == "distinct") return ConstraintClass::distinct();
    if (spec == "odd") return ConstraintClass::odd();

    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("unknown class spec '" + std::string(spec) + "'");
    const auto name = spec.substr(0, colon);
    const auto digits = spec.substr(colon + 1);
    std::int64_t d = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size() || d < 1)
        throw std::invalid_argument("class parameter must be a positive integer in '" + std::string(spec) + "'");

    if (name == "ddistinct") return ConstraintClass::d_distinct(d);
    if (name == "modone") return ConstraintClass::mod_one(d);
    if (name == "gclass") return ConstraintClass::g_class(d);
    throw std::invalid_argument("unknown class spec '" + std::string(spec) + "'");
}

namespace detail {

inline Part mod(Part a, Part m) { return ((a % m) + m) % m; }

// Condition i and ii of the G_d class, with the virtual trailing part 0.
inline bool in_g_class(const Partition& p, Part d) {
    const Part m = 2 * d + 1;
    const Part second = mod(d + 2, m);
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Part r = mod(parts[i], m);
        if (r != 1 && r != second) return false;
        const Part next = i + 1 < parts.size() ? parts[i + 1] : 0;
        const Part gap = parts[i] - next;
        if (r == 1 ? gap >= m : gap > m) return false;
    }
    return true;
}

}  // namespace detail

inline bool is_member(const Partition& p, const ConstraintClass& c) {
    using K = ConstraintClass::Kind;
    const auto& parts = p.parts();
    switch (c.kind()) {
    case K::Unrestricted: return true;
    case K::Distinct:
    case K::DDistinct: {
        const Part d = c.d();
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] - parts[i + 1] < d) return false;
        return true;
    }
    case K::Odd:
    case K::ModOne: {
        const Part m = c.d() + 1;
        return std::all_of(parts.begin(), parts.end(), [m](Part v) { return v % m == 1; });
    }
    case K::GClass: return detail::in_g_class(p, c.d());
    }
    return false;
}

}  // namespace hookcomb
