#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symq {

// A finite commutative ring with identity: Z_n, or GF(p^m) as Z_p[t]/(f).
// Elements are integer codes 0..order()-1. For Z_n the code is the canonical
// residue; for GF(p^m) it is the base-p evaluation of the coefficient vector
// (0 -> 0, 1 -> 1, t -> p, ...), a bijection onto 0..p^m-1.
class Ring {
public:
    enum class Kind { modular, galois };

    // Z_n, n >= 2.
    static Ring modular(int n);

    // GF(p^m) with an explicit monic irreducible modulus of degree m over Z_p,
    // given as coefficients c_0..c_m (constant term first).
    static Ring galois(int p, int m, const std::vector<int>& modulus);

    // GF(p^m) with the built-in default modulus (available for p^m in
    // {p, 4, 8, 9, 16, 25, 27}).
    static Ring galois(int p, int m);

    // Grammar: "Z<n>" or "GF(<p>^<m>)" optionally "/<modulus in t>",
    // e.g. "Z4", "GF(2^2)/t^2+t+1".
    static Ring parse(std::string_view spec);

    Kind kind() const { return kind_; }
    int order() const { return order_; }
    int characteristic() const { return characteristic_; }
    bool is_field() const { return is_field_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    bool is_unit(int a) const;
    // Multiplicative inverse of a unit.
    int inverse(int a) const;

    int zero() const { return 0; }
    int one() const { return 1; }

    // Canonical spec string that parses back to an identical ring.
    std::string spec_string() const;

    bool operator==(const Ring& other) const {
        return kind_ == other.kind_ && order_ == other.order_ && modulus_ == other.modulus_;
    }

private:
    Ring() = default;
    void check_code(int a) const;

    Kind kind_ = Kind::modular;
    int order_ = 0;
    int characteristic_ = 0;
    int prime_ = 0;          // galois only
    int degree_ = 0;         // galois only
    std::vector<int> modulus_; // galois only, c_0..c_m
    bool is_field_ = false;
};

bool is_prime(int n);

} // namespace symq
