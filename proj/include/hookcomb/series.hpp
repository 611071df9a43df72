#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "constraint_class.hpp"

namespace hookcomb {

// ---------------------------------------------------------------------------
// Variables and exponent vectors
// ---------------------------------------------------------------------------

/// Formal variables. a, b, t stand for the free parameters of the
/// Rogers-Fine specialization.
enum class Var : std::uint8_t { x = 0, y = 1, q = 2, a = 3, b = 4, t = 5 };

inline constexpr std::size_t kVarCount = 6;

inline constexpr std::array<Var, kVarCount> kAllVars = {Var::x, Var::y, Var::q, Var::a, Var::b, Var::t};

/// Order in which variables are printed in a monomial: q last.
inline constexpr std::array<Var, kVarCount> kPrintOrder = {Var::x, Var::y, Var::a, Var::b, Var::t, Var::q};

inline constexpr char var_name(Var v) {
    constexpr char names[] = {'x', 'y', 'q', 'a', 'b', 't'};
    return names[static_cast<std::size_t>(v)];
}

class VarSet {
public:
    constexpr VarSet() = default;
    constexpr VarSet(std::initializer_list<Var> vars) {
        for (Var v : vars) bits_ |= bit(v);
    }

    constexpr bool contains(Var v) const { return (bits_ & bit(v)) != 0; }
    constexpr VarSet with(Var v) const {
        VarSet s = *this;
        s.bits_ |= bit(v);
        return s;
    }
    constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }

    friend constexpr bool operator==(VarSet, VarSet) = default;

    std::string str() const {
        std::string s;
        for (Var v : kPrintOrder)
            if (contains(v)) s += var_name(v);
        return s;
    }

private:
    static constexpr std::uint8_t bit(Var v) { return static_cast<std::uint8_t>(1U << static_cast<unsigned>(v)); }
    std::uint8_t bits_ = 0;
};

inline constexpr VarSet kXYQ{Var::x, Var::y, Var::q};
inline constexpr VarSet kYQ{Var::y, Var::q};
inline constexpr VarSet kQ{Var::q};
inline constexpr VarSet kABTQ{Var::a, Var::b, Var::t, Var::q};

using Exponents = std::array<std::int32_t, kVarCount>;

/// Exponent vector from (variable, power) pairs.
inline Exponents exps(std::initializer_list<std::pair<Var, std::int32_t>> powers) {
    Exponents e{};
    for (auto [v, k] : powers) e[static_cast<std::size_t>(v)] += k;
    return e;
}

inline std::int32_t degree(const Exponents& e, Var v) { return e[static_cast<std::size_t>(v)]; }

/// q-degree first, then the remaining exponents lexicographically in the
/// order x, y, a, b, t.
struct CanonicalOrder {
    bool operator()(const Exponents& l, const Exponents& r) const {
        for (Var v : {Var::q, Var::x, Var::y, Var::a, Var::b, Var::t}) {
            const auto i = static_cast<std::size_t>(v);
            if (l[i] != r[i]) return l[i] < r[i];
        }
        return false;
    }
};

class SeriesError : public std::invalid_argument {
public:
    enum class Kind { VariableMismatch, NonUnitDenominator, NonUnitConstantTerm };

    SeriesError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// q-bound of an exact polynomial (no truncation).
inline constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

/// Sparse polynomial with big-integer coefficients over a declared variable
/// set, truncated at q-degree `qbound`. Holds no zero coefficients and no
/// term of q-degree above the bound.
class MultiPoly {
public:
    using Terms = std::map<Exponents, BigInt, CanonicalOrder>;

    explicit MultiPoly(VarSet vars, int qbound = kUnbounded) : vars_(vars), qbound_(qbound) {
        if (!vars.contains(Var::q)) throw std::invalid_argument("polynomials must declare the variable q");
        if (qbound < 0) throw std::invalid_argument("qbound must be >= 0");
    }

    static MultiPoly constant(const BigInt& c, VarSet vars, int qbound = kUnbounded) {
        MultiPoly p(vars, qbound);
        p.add_term(Exponents{}, c);
        return p;
    }

    static MultiPoly monomial(const BigInt& c, const Exponents& e, VarSet vars, int qbound = kUnbounded) {
        MultiPoly p(vars, qbound);
        p.add_term(e, c);
        return p;
    }

    static MultiPoly variable(Var v, VarSet vars, int qbound = kUnbounded) {
        return monomial(1, exps({{v, 1}}), vars, qbound);
    }

    VarSet vars() const noexcept { return vars_; }
    int qbound() const noexcept { return qbound_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    BigInt coefficient(const Exponents& e) const {
        const auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// Adds c * monomial(e); silently drops terms above the q-bound.
    void add_term(const Exponents& e, const BigInt& c) {
        for (Var v : kAllVars) {
            const auto k = degree(e, v);
            if (k < 0) throw std::invalid_argument("negative exponents are not supported");
            if (k != 0 && !vars_.contains(v))
                throw SeriesError(SeriesError::Kind::VariableMismatch,
                                  std::string("variable ") + var_name(v) + " not declared in {" + vars_.str() + "}");
        }
        if (c == 0 || degree(e, Var::q) > qbound_) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Copy with a tighter (or equal) q-bound.
    MultiPoly truncated(int qbound) const {
        MultiPoly out(vars_, std::min(qbound, qbound_));
        for (const auto& [e, c] : terms_)
            if (degree(e, Var::q) <= out.qbound_) out.terms_.emplace_hint(out.terms_.end(), e, c);
        return out;
    }

    /// Same terms over a larger variable set.
    MultiPoly widened(VarSet vars) const {
        if (!vars_.subset_of(vars))
            throw SeriesError(SeriesError::Kind::VariableMismatch, "cannot narrow {" + vars_.str() + "} to {" + vars.str() + "}");
        MultiPoly out(vars, qbound_);
        out.terms_ = terms_;
        return out;
    }

    /// Terms of q-degree exactly k.
    MultiPoly q_slice(int k) const {
        MultiPoly out(vars_, qbound_);
        for (const auto& [e, c] : terms_)
            if (degree(e, Var::q) == k) out.terms_.emplace_hint(out.terms_.end(), e, c);
        return out;
    }

    int max_q_degree() const { return terms_.empty() ? -1 : degree(terms_.rbegin()->first, Var::q); }

    /// True when the q^0 part is exactly the constant 1.
    bool has_unit_constant_term() const {
        bool found_one = false;
        for (const auto& [e, c] : terms_) {
            if (degree(e, Var::q) != 0) break;
            if (e != Exponents{} || c != 1) return false;
            found_one = true;
        }
        return found_one;
    }

    MultiPoly operator-() const {
        MultiPoly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    friend MultiPoly operator+(const MultiPoly& l, const MultiPoly& r) {
        check_same_vars(l, r);
        MultiPoly out = l.truncated(r.qbound_);
        for (const auto& [e, c] : r.terms_) out.add_term(e, c);
        return out;
    }

    friend MultiPoly operator-(const MultiPoly& l, const MultiPoly& r) { return l + (-r); }

    friend MultiPoly operator*(const MultiPoly& l, const MultiPoly& r) {
        check_same_vars(l, r);
        MultiPoly out(l.vars_, std::min(l.qbound_, r.qbound_));
        for (const auto& [el, cl] : l.terms_) {
            const auto ql = degree(el, Var::q);
            if (ql > out.qbound_) break;
            for (const auto& [er, cr] : r.terms_) {
                if (ql + degree(er, Var::q) > out.qbound_) break;  // r is sorted by q-degree
                Exponents e;
                for (std::size_t i = 0; i < kVarCount; ++i) e[i] = el[i] + er[i];
                out.accumulate(e, cl * cr);
            }
        }
        out.drop_zeros();
        return out;
    }

    MultiPoly& operator+=(const MultiPoly& r) { return *this = *this + r; }
    MultiPoly& operator*=(const MultiPoly& r) { return *this = *this * r; }

    /// Same variables and same terms; q-bounds are not compared.
    friend bool operator==(const MultiPoly& l, const MultiPoly& r) {
        return l.vars_ == r.vars_ && l.terms_ == r.terms_;
    }

private:
    static void check_same_vars(const MultiPoly& l, const MultiPoly& r) {
        if (l.vars_ != r.vars_)
            throw SeriesError(SeriesError::Kind::VariableMismatch,
                              "variable sets differ: {" + l.vars_.str() + "} vs {" + r.vars_.str() + "}");
    }

    void accumulate(const Exponents& e, const BigInt& c) { terms_[e] += c; }

    void drop_zeros() {
        std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
    }

    VarSet vars_;
    int qbound_;
    Terms terms_;
};

/// Power of a polynomial, truncated at its own q-bound.
inline MultiPoly pow(const MultiPoly& p, unsigned k) {
    MultiPoly out = MultiPoly::constant(1, p.vars(), p.qbound());
    for (unsigned i = 0; i < k; ++i) out *= p;
    return out;
}

/// q^k over the given variables.
inline MultiPoly q_power(int k, VarSet vars, int qbound = kUnbounded) {
    return MultiPoly::monomial(1, exps({{Var::q, k}}), vars, qbound);
}

// ---------------------------------------------------------------------------
// Canonical text form
// ---------------------------------------------------------------------------

inline std::string monomial_string(const Exponents& e) {
    std::string s;
    for (Var v : kPrintOrder) {
        const auto k = degree(e, v);
        if (k == 0) continue;
        if (!s.empty()) s += '*';
        s += var_name(v);
        if (k != 1) s += '^' + std::to_string(k);
    }
    return s;
}

/// Terms in canonical order, e.g. "x*y*q + x^2*y*q^2"; "0" for zero.
inline std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        if (first) s += negative ? "-" : "";
        else s += negative ? " - " : " + ";
        first = false;
        const std::string mono = monomial_string(e);
        if (mono.empty()) s += magnitude.str();
        else if (magnitude == 1) s += mono;
        else s += magnitude.str() + "*" + mono;
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

// ---------------------------------------------------------------------------
// Power-series operations
// ---------------------------------------------------------------------------

/// r with p*r = 1 up to q-degree min(qbound, p.qbound()), solved degree by
/// degree: r_0 = 1, r_k = -sum_{j=1..k} p_j r_{k-j}.
inline MultiPoly series_inverse(const MultiPoly& p, int qbound) {
    if (!p.has_unit_constant_term())
        throw SeriesError(SeriesError::Kind::NonUnitConstantTerm,
                          "series inverse needs q^0 part exactly 1, got " + to_string(p.q_slice(0)));
    const int bound = std::min(qbound, p.qbound());
    std::vector<MultiPoly> slices;
    for (int k = 0; k <= bound; ++k) slices.push_back(p.q_slice(k).truncated(bound));

    std::vector<MultiPoly> r;
    r.push_back(MultiPoly::constant(1, p.vars(), bound));
    for (int k = 1; k <= bound; ++k) {
        MultiPoly acc(p.vars(), bound);
        for (int j = 1; j <= k; ++j) {
            if (slices[static_cast<std::size_t>(j)].is_zero()) continue;
            acc += slices[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
        }
        r.push_back(-acc);
    }
    MultiPoly out(p.vars(), bound);
    for (const auto& slice : r) out += slice;
    return out;
}

/// numerator / denominator as a formal power series in q.
struct RationalGF {
    MultiPoly numerator;
    MultiPoly denominator;
};

inline std::string to_string(const RationalGF& gf) {
    return "(" + to_string(gf.numerator) + ")/(" + to_string(gf.denominator) + ")";
}

/// Power-series expansion up to q-degree qbound. The result is checked by
/// multiplying back with the denominator.
inline MultiPoly expand(const RationalGF& gf, int qbound) {
    if (qbound < 0) throw std::invalid_argument("qbound must be >= 0");
    if (!gf.denominator.has_unit_constant_term())
        throw SeriesError(SeriesError::Kind::NonUnitDenominator,
                          "denominator must have constant term 1: " + to_string(gf.denominator));
    const MultiPoly num = gf.numerator.truncated(qbound);
    MultiPoly out = num * series_inverse(gf.denominator, qbound);
    if ((out * gf.denominator).truncated(out.qbound()) != num.truncated(out.qbound()))
        throw std::logic_error("expansion failed the multiply-back check");
    return out;
}

/// (base; q)_n = prod_{k=0}^{n-1} (1 - base q^k), truncated at qbound.
inline MultiPoly pochhammer(const MultiPoly& base, unsigned n, int qbound) {
    const VarSet vars = base.vars();
    const MultiPoly one = MultiPoly::constant(1, vars, qbound);
    MultiPoly out = one;
    for (unsigned k = 0; k < n; ++k) {
        const MultiPoly factor = one - base * q_power(static_cast<int>(k), vars, qbound);
        out *= factor;
    }
    return out.truncated(qbound);
}

/// Simultaneous substitution v -> assignment[v] for every declared variable
/// of p. Truncation is meaningful when q maps to a series of q-degree >= 1
/// (typically q itself).
inline MultiPoly substitute(const MultiPoly& p, const std::map<Var, MultiPoly>& assignment) {
    if (assignment.empty()) throw std::invalid_argument("empty substitution");
    const VarSet target = assignment.begin()->second.vars();
    int bound = p.qbound();
    for (Var v : kAllVars) {
        if (!p.vars().contains(v)) continue;
        const auto it = assignment.find(v);
        if (it == assignment.end())
            throw std::invalid_argument(std::string("substitution does not cover variable ") + var_name(v));
        if (it->second.vars() != target)
            throw SeriesError(SeriesError::Kind::VariableMismatch, "substituted values use different variable sets");
        bound = std::min(bound, it->second.qbound());
    }

    std::map<Var, std::vector<MultiPoly>> powers;
    auto power_of = [&](Var v, std::int32_t k) -> const MultiPoly& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(MultiPoly::constant(1, target, bound));
        while (cache.size() <= static_cast<std::size_t>(k))
            cache.push_back(cache.back() * assignment.at(v).truncated(bound));
        return cache[static_cast<std::size_t>(k)];
    };

    MultiPoly out(target, bound);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(c, target, bound);
        for (Var v : kAllVars) {
            const auto k = degree(e, v);
            if (k > 0) term *= power_of(v, k);
        }
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generating functions of the partition classes
// ---------------------------------------------------------------------------

/// Closed rational form of sum x^{largest} y^{length} q^{perimeter} over the
/// class.
inline RationalGF gf_of_class(const ConstraintClass& c) {
    using K = ConstraintClass::Kind;
    auto m = [](std::int64_t coeff, std::int32_t x, std::int32_t y, std::int32_t q) {
        return MultiPoly::monomial(coeff, exps({{Var::x, x}, {Var::y, y}, {Var::q, q}}), kXYQ);
    };
    const auto d = static_cast<std::int32_t>(c.d());
    const MultiPoly one = MultiPoly::constant(1, kXYQ);
    const MultiPoly xyq = m(1, 1, 1, 1);

    switch (c.kind()) {
    case K::Unrestricted: return {xyq, one - m(1, 1, 0, 1) - m(1, 0, 1, 1)};
    case K::Distinct:
    case K::DDistinct: return {xyq, one - m(1, 1, 0, 1) - m(1, d, 1, d + 1)};
    case K::Odd:
    case K::ModOne: return {xyq, one - m(1, 0, 1, 1) - m(1, d + 1, 0, d + 1)};
    case K::GClass:
        return {xyq * (one - m(1, 0, 1, 1) + m(1, d + 1, 0, d + 1)),
                one - m(2, 0, 1, 1) + m(1, 0, 2, 2) - m(1, 2 * d + 1, 1, 2 * d + 2)};
    }
    throw std::logic_error("unknown class");
}

}  // namespace hookcomb
