#pragma once

// Text renderings of a Decomposition: one term per line for people, a
// single CAS-style expression line, and the versioned "pfd-1" JSON schema.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfd/decompose.hpp"
#include "pfd/poly.hpp"

namespace pfd {

enum class Format { human, json, cas };

inline Format parse_format(std::string_view s) {
    if (s == "human") return Format::human;
    if (s == "json") return Format::json;
    if (s == "cas") return Format::cas;
    throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

struct Symbols {
    std::string var = "x";
    std::string param = "t";
};

namespace detail {

template <Field F>
std::string descending(const Poly<F>& p, const Symbols& s) {
    return to_string(p, s.var, s.param, TermOrder::descending);
}

/// "(num)/(base)^j" for each term, polynomial part first when nonzero.
template <Field F>
std::vector<std::string> term_strings(const Decomposition<F>& d, const Symbols& s) {
    std::vector<std::string> out;
    if (!d.polynomial_part.is_zero()) out.push_back(descending(d.polynomial_part, s));
    for (const auto& g : d.groups) {
        const std::string base = "(" + descending(g.base, s) + ")";
        for (const auto& t : g.terms) {
            std::string term = "(" + descending(t.numerator, s) + ")/" + base;
            if (t.power > 1) term += "^" + std::to_string(t.power);
            out.push_back(std::move(term));
        }
    }
    return out;
}

template <Field F>
nlohmann::ordered_json coeff_array(const Poly<F>& p, const Symbols& s) {
    auto arr = nlohmann::ordered_json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c, s.param));
    return arr;
}

}  // namespace detail

template <Field F>
nlohmann::ordered_json to_json(const Decomposition<F>& d, const Symbols& s = {}) {
    nlohmann::ordered_json j;
    j["schema"] = "pfd-1";
    j["variable"] = s.var;
    j["polynomial_part"] = detail::coeff_array(d.polynomial_part, s);
    auto groups = nlohmann::ordered_json::array();
    for (const auto& g : d.groups) {
        nlohmann::ordered_json gj;
        gj["base"] = detail::coeff_array(g.base, s);
        auto terms = nlohmann::ordered_json::array();
        for (const auto& t : g.terms) {
            nlohmann::ordered_json tj;
            tj["power"] = t.power;
            tj["numerator"] = detail::coeff_array(t.numerator, s);
            terms.push_back(std::move(tj));
        }
        gj["terms"] = std::move(terms);
        groups.push_back(std::move(gj));
    }
    j["groups"] = std::move(groups);
    return j;
}

template <Field F>
std::string render(const Decomposition<F>& d, Format format, const Symbols& s = {}) {
    if (format == Format::json) return to_json(d, s).dump();
    auto terms = detail::term_strings(d, s);
    if (terms.empty()) return "0";
    std::string out;
    const char* sep = format == Format::human ? "\n" : " + ";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) out += sep;
        out += terms[i];
    }
    return out;
}

}  // namespace pfd
