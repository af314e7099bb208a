#ifndef NK_POLYNOMIAL_HPP
#define NK_POLYNOMIAL_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "nk/numeric.hpp"

namespace nk {

// Integer polynomial, coefficients in ascending degree order. The zero
// polynomial is the empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> ascending);
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly constant(Int c);
    static IntPoly x_power(int k); // t^k

    const std::vector<Int>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& leading() const { return c_.back(); }
    Int coeff(int k) const; // 0 outside range
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }
    bool operator<(const IntPoly& o) const; // lexicographic on (degree, coeffs), for map keys

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(const Int& k) const;

    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;
    // Sign of the value at +infinity / -infinity.
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    IntPoly derivative() const;
    Int content() const;          // gcd of coefficients, >= 0
    IntPoly primitive_part() const; // content 1, positive leading coefficient
    IntPoly reversed() const;     // t^deg * p(1/t), trimmed
    bool is_self_reciprocal() const; // reversed() == +-p

    // Strict upper bound B with every real root in (-B, B).
    Rat root_bound() const;

private:
    void trim();
    std::vector<Int> c_;
};

// Quotient when q divides p exactly over Z; nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// p with repeated roots stripped: p / gcd(p, p'), primitive.
IntPoly squarefree_part(const IntPoly& p);

IntPoly poly_pow(const IntPoly& p, unsigned e);

} // namespace nk

#endif
