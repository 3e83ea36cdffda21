#pragma once

#include <amt/numeric.hpp>

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace amt {

// The distinguished truth value assigned to propositional variables.
struct Truth {};
inline bool operator==(Truth, Truth) { return true; }
inline bool operator<(Truth, Truth) { return false; }

using Value = std::variant<Int, Rat, Truth>;

inline bool is_truth(const Value& v) { return std::holds_alternative<Truth>(v); }

// Integral reading of a value; a rational with denominator 1 counts.
inline std::optional<Int> as_integer(const Value& v) {
    if (const auto* n = std::get_if<Int>(&v)) {
        return *n;
    }
    if (const auto* q = std::get_if<Rat>(&v)) {
        if (boost::multiprecision::denominator(*q) == 1) {
            return Int(boost::multiprecision::numerator(*q));
        }
    }
    return std::nullopt;
}

inline std::optional<Rat> as_rational(const Value& v) {
    if (const auto* n = std::get_if<Int>(&v)) {
        return Rat(*n);
    }
    if (const auto* q = std::get_if<Rat>(&v)) {
        return *q;
    }
    return std::nullopt;
}

inline std::string value_text(const Value& v) {
    if (is_truth(v)) {
        return "t";
    }
    if (const auto* n = std::get_if<Int>(&v)) {
        return to_string(*n);
    }
    return to_string(std::get<Rat>(v));
}

inline int cmp3_value(const Value& a, const Value& b) {
    if (a.index() != b.index()) {
        return a.index() < b.index() ? -1 : 1;
    }
    if (const auto* n = std::get_if<Int>(&a)) {
        return cmp3(*n, std::get<Int>(b));
    }
    if (const auto* q = std::get_if<Rat>(&a)) {
        return cmp3(*q, std::get<Rat>(b));
    }
    return 0;
}

inline bool operator==(const Value& a, const Value& b) { return cmp3_value(a, b) == 0; }

// A partial assignment of domain values to variables. An absent entry is the
// undefined value u, so inclusion of assignments is plain map inclusion.
struct Valuation {
    std::map<std::string, Value> defined;

    bool has(const std::string& var) const { return defined.count(var) != 0; }

    const Value* get(const std::string& var) const {
        auto it = defined.find(var);
        return it == defined.end() ? nullptr : &it->second;
    }

    void set(std::string var, Value v) { defined.insert_or_assign(std::move(var), std::move(v)); }

    bool subset_of(const Valuation& other) const {
        for (const auto& [var, val] : defined) {
            const Value* w = other.get(var);
            if (w == nullptr || !(*w == val)) {
                return false;
            }
        }
        return true;
    }

    bool empty() const { return defined.empty(); }
    std::size_t size() const { return defined.size(); }
};

inline int cmp3_valuation(const Valuation& a, const Valuation& b) {
    auto ia = a.defined.begin();
    auto ib = b.defined.begin();
    for (; ia != a.defined.end() && ib != b.defined.end(); ++ia, ++ib) {
        if (int c = cmp3(ia->first, ib->first)) {
            return c;
        }
        if (int c = cmp3_value(ia->second, ib->second)) {
            return c;
        }
    }
    if (ia != a.defined.end()) { return 1; }
    if (ib != b.defined.end()) { return -1; }
    return 0;
}

inline bool operator==(const Valuation& a, const Valuation& b) { return cmp3_valuation(a, b) == 0; }
inline bool operator<(const Valuation& a, const Valuation& b) { return cmp3_valuation(a, b) < 0; }

std::string valuation_text(const Valuation& v);

} // namespace amt
