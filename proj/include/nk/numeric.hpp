#ifndef NK_NUMERIC_HPP
#define NK_NUMERIC_HPP

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace nk {

// Plain value semantics (no expression templates) keeps these usable as
// container elements and in generic code without surprises.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

struct GaussianInt {
    Int re;
    Int im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long r, long i) : re(r), im(i) {}

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianInt& o) const { return !(*this == o); }

    GaussianInt conj() const { return {re, -im}; }
    Int norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    // Representative in {0, 1, i, 1+i} of the residue mod 2Z[i].
    GaussianInt mod2() const {
        return {((re % 2) + 2) % 2, ((im % 2) + 2) % 2};
    }
};

// Canonical "a+bi" form with zero parts suppressed: "0", "3", "1i",
// "-1i", "1+1i", "2-3i". Round-trips through the matrix grammar.
inline std::string to_string(const GaussianInt& g) {
    if (g.re == 0 && g.im == 0) return "0";
    std::string s;
    if (g.re != 0) s += g.re.str();
    if (g.im != 0) {
        if (g.re != 0)
            s += (g.im < 0) ? "-" : "+";
        else if (g.im < 0)
            s += "-";
        s += abs(g.im).str() + "i";
    }
    return s;
}

} // namespace nk

#endif
