#include "polynomial.hpp"

#include "error.hpp"

#include <algorithm>
#include <numeric>

namespace symq {

Polynomial::Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

void Polynomial::add_term(const Exponents& exponents, long long coefficient) {
    if (exponents.size() != vars_.size())
        throw Error::invalid("polynomial term arity does not match variable count");
    for (int e : exponents)
        if (e < 0) throw Error::invalid("polynomial exponents must be nonnegative");
    if (coefficient == 0) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, coefficient);
    } else {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (vars_ != other.vars_) throw Error::invalid("polynomial variable lists differ");
    for (const auto& [exp, coef] : other.terms_) add_term(exp, coef);
    return *this;
}

Polynomial Polynomial::specialize(const std::string& variable, long long value) const {
    auto pos = std::find(vars_.begin(), vars_.end(), variable);
    if (pos == vars_.end()) throw Error::invalid("unknown polynomial variable '" + variable + "'");
    size_t k = static_cast<size_t>(pos - vars_.begin());
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + k);
    Polynomial result(rest);
    for (const auto& [exp, coef] : terms_) {
        long long factor = 1;
        for (int e = 0; e < exp[k]; ++e) factor *= value;
        Exponents reduced = exp;
        reduced.erase(reduced.begin() + k);
        result.add_term(reduced, coef * factor);
    }
    return result;
}

long long Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    long long v = 0;
    for (const auto& [exp, coef] : terms_) {
        for (int e : exp)
            if (e != 0) throw Error::invalid("polynomial is not constant");
        v += coef;
    }
    return v;
}

std::vector<Polynomial::Exponents> Polynomial::sorted_exponents() const {
    std::vector<Exponents> order;
    order.reserve(terms_.size());
    for (const auto& [exp, coef] : terms_) order.push_back(exp);
    std::sort(order.begin(), order.end(), [](const Exponents& a, const Exponents& b) {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    });
    return order;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Exponents& exp : sorted_exponents()) {
        long long coef = terms_.at(exp);
        if (first) {
            if (coef < 0) out += "-";
        } else {
            out += coef < 0 ? " - " : " + ";
        }
        first = false;
        long long mag = coef < 0 ? -coef : coef;
        bool all_zero = std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
        if (mag != 1 || all_zero) out += std::to_string(mag);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (exp[i] == 0) continue;
            out += vars_[i];
            if (exp[i] != 1) out += "^" + std::to_string(exp[i]);
        }
    }
    return out;
}

std::string Polynomial::to_json() const {
    std::string out = "{\"vars\":[";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) out += ",";
        out += "\"" + vars_[i] + "\"";
    }
    out += "],\"terms\":[";
    bool first = true;
    for (const Exponents& exp : sorted_exponents()) {
        if (!first) out += ",";
        first = false;
        out += "{\"exp\":[";
        for (size_t i = 0; i < exp.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(exp[i]);
        }
        out += "],\"coef\":" + std::to_string(terms_.at(exp)) + "}";
    }
    out += "]}";
    return out;
}

} // namespace symq
