#include "ring.hpp"

#include "error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace symq {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Polynomials over Z_p as coefficient vectors, constant term first.
using Poly = std::vector<int>;

int poly_degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

// Remainder of f modulo the monic polynomial m.
Poly poly_mod(Poly f, const Poly& m, int p) {
    int dm = poly_degree(m);
    for (int i = poly_degree(f); i >= dm; --i) {
        int c = f[i];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j)
            f[i - dm + j] = ((f[i - dm + j] - c * m[j]) % p + p) % p;
    }
    f.resize(dm, 0);
    return f;
}

int poly_to_code(const Poly& f, int p) {
    int code = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        code = code * p + f[i];
    return code;
}

Poly code_to_poly(int code, int p, int m) {
    Poly f(m, 0);
    for (int i = 0; i < m; ++i) {
        f[i] = code % p;
        code /= p;
    }
    return f;
}

// Irreducibility over Z_p by trial division against all monic polynomials of
// degree 1..deg/2. Fine at desk scale.
bool poly_irreducible(const Poly& f, int p) {
    int df = poly_degree(f);
    if (df < 1) return false;
    for (int d = 1; 2 * d <= df; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            Poly g = code_to_poly(static_cast<int>(c), p, d);
            g.push_back(1); // monic of degree d
            if (poly_degree(poly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

const std::map<int, std::vector<int>>& default_moduli() {
    // Constant term first; GF(4) uses t^2+t+1.
    static const std::map<int, std::vector<int>> table = {
        {4, {1, 1, 1}},        // t^2+t+1 over Z_2
        {8, {1, 1, 0, 1}},     // t^3+t+1 over Z_2
        {9, {1, 0, 1}},        // t^2+1 over Z_3
        {16, {1, 1, 0, 0, 1}}, // t^4+t+1 over Z_2
        {25, {1, 1, 1}},       // t^2+t+1 over Z_5
        {27, {1, 2, 0, 1}},    // t^3+2t+1 over Z_3
    };
    return table;
}

// Parses a polynomial in t over Z_p, e.g. "t^2+t+1", "t^3+2t+1", "2", "t".
Poly parse_modulus(std::string_view text, int p) {
    Poly coeffs;
    auto bump = [&](int deg, int c) {
        if (deg >= static_cast<int>(coeffs.size())) coeffs.resize(deg + 1, 0);
        coeffs[deg] = ((coeffs[deg] + c) % p + p) % p;
    };
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (!first || text[i] == '+' || text[i] == '-') {
            if (text[i] == '+') { ++i; }
            else if (text[i] == '-') { sign = -1; ++i; }
            else throw Error::invalid("modulus polynomial: expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;
        skip_ws();
        int coef = -1; // -1: not written
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coef = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                coef = coef * 10 + (text[i++] - '0');
        }
        if (i < text.size() && text[i] == '*') ++i;
        int deg = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            deg = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw Error::invalid("modulus polynomial: missing exponent");
                deg = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    deg = deg * 10 + (text[i++] - '0');
            }
        } else if (coef < 0) {
            throw Error::invalid("modulus polynomial: expected term at position " + std::to_string(i));
        }
        if (coef < 0) coef = 1;
        bump(deg, sign * coef);
        skip_ws();
    }
    if (coeffs.empty()) throw Error::invalid("modulus polynomial: empty");
    return coeffs;
}

} // namespace

Ring Ring::modular(int n) {
    if (n < 2) throw Error::invalid("Z_n requires n >= 2, got n=" + std::to_string(n));
    Ring r;
    r.kind_ = Kind::modular;
    r.order_ = n;
    r.characteristic_ = n;
    r.is_field_ = is_prime(n);
    return r;
}

Ring Ring::galois(int p, int m, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw Error::invalid("GF(p^m) requires prime p, got p=" + std::to_string(p));
    if (m < 1) throw Error::invalid("GF(p^m) requires m >= 1");
    Poly f(modulus);
    for (int& c : f) c = ((c % p) + p) % p;
    if (poly_degree(f) != m)
        throw Error::invalid("modulus must have degree " + std::to_string(m));
    if (f[m] != 1) throw Error::invalid("modulus must be monic");
    if (!poly_irreducible(f, p))
        throw Error::invalid("modulus is reducible over Z_" + std::to_string(p));
    long long order = 1;
    for (int i = 0; i < m; ++i) {
        order *= p;
        if (order > (1 << 20)) throw Error::limit("GF(p^m) too large");
    }
    Ring r;
    r.kind_ = Kind::galois;
    r.order_ = static_cast<int>(order);
    r.characteristic_ = p;
    r.prime_ = p;
    r.degree_ = m;
    r.modulus_ = std::move(f);
    r.is_field_ = true;
    return r;
}

Ring Ring::galois(int p, int m) {
    if (!is_prime(p)) throw Error::invalid("GF(p^m) requires prime p, got p=" + std::to_string(p));
    if (m == 1) return galois(p, 1, {0, 1}); // Z_p[t]/(t)
    long long q = 1;
    for (int i = 0; i < m; ++i) q *= p;
    auto it = default_moduli().find(static_cast<int>(q));
    if (it == default_moduli().end())
        throw Error::invalid("no default modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) +
                             "); pass one explicitly, e.g. GF(2^2)/t^2+t+1");
    return galois(p, m, it->second);
}

Ring Ring::parse(std::string_view spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error::invalid("empty ring spec");
    if (s[0] == 'Z') {
        size_t pos = 1;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw Error::invalid("bad ring spec '" + s + "': expected Z<n>");
        int n = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            n = n * 10 + (s[pos++] - '0');
        if (pos != s.size()) throw Error::invalid("bad ring spec '" + s + "'");
        return modular(n);
    }
    if (s.rfind("GF(", 0) == 0) {
        size_t close = s.find(')');
        if (close == std::string::npos) throw Error::invalid("bad ring spec '" + s + "': missing ')'");
        std::string inner = s.substr(3, close - 3);
        size_t caret = inner.find('^');
        if (caret == std::string::npos)
            throw Error::invalid("bad ring spec '" + s + "': expected GF(<p>^<m>)");
        int p = 0, m = 0;
        try {
            p = std::stoi(inner.substr(0, caret));
            m = std::stoi(inner.substr(caret + 1));
        } catch (const std::exception&) {
            throw Error::invalid("bad ring spec '" + s + "'");
        }
        if (close + 1 == s.size()) return galois(p, m);
        if (s[close + 1] != '/')
            throw Error::invalid("bad ring spec '" + s + "': expected '/' before modulus");
        Poly f = parse_modulus(s.substr(close + 2), p);
        return galois(p, m, f);
    }
    throw Error::invalid("bad ring spec '" + s + "': expected Z<n> or GF(<p>^<m>)");
}

void Ring::check_code(int a) const {
    if (a < 0 || a >= order_)
        throw Error::invalid("ring element code " + std::to_string(a) + " out of range 0.." +
                             std::to_string(order_ - 1));
}

int Ring::add(int a, int b) const {
    check_code(a);
    check_code(b);
    if (kind_ == Kind::modular) return (a + b) % order_;
    // Base-p digits add componentwise.
    int r = 0, mul = 1;
    for (int i = 0; i < degree_; ++i) {
        r += ((a % prime_ + b % prime_) % prime_) * mul;
        a /= prime_;
        b /= prime_;
        mul *= prime_;
    }
    return r;
}

int Ring::neg(int a) const {
    check_code(a);
    if (kind_ == Kind::modular) return (order_ - a) % order_;
    int r = 0, mul = 1;
    for (int i = 0; i < degree_; ++i) {
        r += ((prime_ - a % prime_) % prime_) * mul;
        a /= prime_;
        mul *= prime_;
    }
    return r;
}

int Ring::sub(int a, int b) const { return add(a, neg(b)); }

int Ring::mul(int a, int b) const {
    check_code(a);
    check_code(b);
    if (kind_ == Kind::modular)
        return static_cast<int>((static_cast<long long>(a) * b) % order_);
    Poly fa = code_to_poly(a, prime_, degree_);
    Poly fb = code_to_poly(b, prime_, degree_);
    return poly_to_code(poly_mod(poly_mul(fa, fb, prime_), modulus_, prime_), prime_);
}

bool Ring::is_unit(int a) const {
    check_code(a);
    if (kind_ == Kind::galois) return a != 0;
    return std::gcd(a, order_) == 1;
}

int Ring::inverse(int a) const {
    if (!is_unit(a)) throw Error::invalid("element " + std::to_string(a) + " is not a unit");
    for (int b = 0; b < order_; ++b)
        if (mul(a, b) == 1) return b;
    throw Error::invalid("no inverse found"); // unreachable
}

std::string Ring::spec_string() const {
    if (kind_ == Kind::modular) return "Z" + std::to_string(order_);
    std::string s = "GF(" + std::to_string(prime_) + "^" + std::to_string(degree_) + ")/";
    bool first = true;
    for (int i = static_cast<int>(modulus_.size()) - 1; i >= 0; --i) {
        int c = modulus_[i];
        if (c == 0) continue;
        if (!first) s += "+";
        first = false;
        if (i == 0 || c != 1) s += std::to_string(c);
        if (i >= 1) {
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace symq
