#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symq {

// Multivariate polynomial with integer coefficients in a fixed ordered list
// of formal variables. Zero coefficients are never stored. The canonical
// serialization sorts terms by descending total degree, ties broken by
// lexicographically descending exponent tuples.
class Polynomial {
public:
    using Exponents = std::vector<int>;

    explicit Polynomial(std::vector<std::string> variables);

    static Polynomial zero(std::vector<std::string> variables) { return Polynomial(std::move(variables)); }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& exponents, long long coefficient);

    Polynomial& operator+=(const Polynomial& other);
    bool operator==(const Polynomial& other) const { return vars_ == other.vars_ && terms_ == other.terms_; }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // Substitutes an integer for one variable, returning a polynomial in the
    // remaining variables.
    Polynomial specialize(const std::string& variable, long long value) const;

    // Value of a constant polynomial (no variables, or after full specialization).
    long long constant_value() const;

    // Canonical text, e.g. "s^16t^16 + 15s^8t^8"; the zero polynomial is "0".
    std::string to_string() const;

    // {"vars":[...],"terms":[{"exp":[...],"coef":...},...]} with terms in
    // canonical order.
    std::string to_json() const;

private:
    std::vector<Exponents> sorted_exponents() const;

    std::vector<std::string> vars_;
    std::map<Exponents, long long> terms_;
};

} // namespace symq
