#pragma once

/**
 * @file field.hpp
 * @brief The coefficient-field contract shared by every algorithm in pfd.
 *
 * Every decomposition routine is a template over a field type F. A field
 * type is a regular value type with exact arithmetic and a canonical
 * representative for each value, so that `==` is mathematical equality.
 * Beyond the arithmetic operators, the following free functions must be
 * reachable by ADL:
 *
 *   inverse(a)                  multiplicative inverse, throws on zero
 *   to_string(a, param)         canonical text, `param` names the parameter
 *   canonical_compare(a, b)     a total order on representatives
 *   is_negative(a)              true when the printed form starts with '-'
 */

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace pfd {

template <typename F>
concept Field = std::regular<F> && requires(const F a, const F b, long n, std::string_view s) {
    F(n);
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { inverse(a) } -> std::same_as<F>;
    { to_string(a, s) } -> std::same_as<std::string>;
    { canonical_compare(a, b) } -> std::same_as<std::strong_ordering>;
    { is_negative(a) } -> std::convertible_to<bool>;
};

/// Per-field hooks that have no natural free-function form.
template <typename F>
struct field_traits {
    /// Whether the field carries a transcendental parameter t.
    static constexpr bool has_parameter = false;
    /// Coefficient text must be parenthesized inside products.
    static constexpr bool needs_parens = false;
};

}  // namespace pfd
