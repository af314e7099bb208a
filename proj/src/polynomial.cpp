#include "nk/polynomial.hpp"

#include <algorithm>

#include "nk/errors.hpp"

namespace nk {

IntPoly::IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    c_.reserve(ascending.size());
    for (long v : ascending) c_.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
    std::vector<Int> v;
    v.push_back(std::move(c));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x_power(int k) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = 1;
    return IntPoly(std::move(v));
}

Int IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
    return c_[k];
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Int& k) const {
    std::vector<Int> r(c_);
    for (auto& x : r) x *= k;
    return IntPoly(std::move(r));
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
}

int IntPoly::sign_at(const Rat& x) const { return eval(x).sign(); }

int IntPoly::sign_at_pos_inf() const { return is_zero() ? 0 : leading().sign(); }

int IntPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = leading().sign();
    return (degree() % 2 == 0) ? s : -s;
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(i);
    return IntPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> r(c_);
    for (auto& x : r) x /= g;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

bool IntPoly::is_self_reciprocal() const {
    if (is_zero()) return false;
    IntPoly rev = reversed();
    return rev == *this || rev == -*this;
}

Rat IntPoly::root_bound() const {
    if (degree() < 1) return Rat(1);
    Int m(0);
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) m = std::max(m, abs(c_[i]));
    return Rat(1) + Rat(m, abs(leading()));
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) return std::nullopt;
    if (p.is_zero()) return IntPoly();
    if (p.degree() < q.degree()) return std::nullopt;

    std::vector<Rat> rem(p.coeffs().size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = Rat(p.coeffs()[i]);
    int dq = q.degree();
    Rat lead(q.leading());
    std::vector<Rat> quot(p.degree() - dq + 1, Rat(0));
    for (int k = p.degree() - dq; k >= 0; --k) {
        Rat f = rem[k + dq] / lead;
        quot[k] = f;
        if (f == 0) continue;
        for (int i = 0; i <= dq; ++i) rem[k + i] -= f * Rat(q.coeffs()[i]);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    std::vector<Int> qi(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (denominator(quot[i]) != 1) return std::nullopt;
        qi[i] = numerator(quot[i]);
    }
    return IntPoly(std::move(qi));
}

namespace {

// Rational polynomial remainder, returned as a primitive integer polynomial
// scaled by a positive rational (signs preserved).
IntPoly signed_primitive_remainder(const IntPoly& a, const IntPoly& b) {
    std::vector<Rat> rem(a.coeffs().size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = Rat(a.coeffs()[i]);
    int db = b.degree();
    Rat lead(b.leading());
    for (int k = a.degree() - db; k >= 0; --k) {
        Rat f = rem[k + db] / lead;
        if (f == 0) continue;
        for (int i = 0; i <= db; ++i) rem[k + i] -= f * Rat(b.coeffs()[i]);
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) return IntPoly();
    Int l(1);
    for (const auto& r : rem) l = boost::multiprecision::lcm(l, denominator(r));
    std::vector<Int> ri(rem.size());
    for (std::size_t i = 0; i < rem.size(); ++i) ri[i] = numerator(rem[i] * Rat(l));
    IntPoly out{std::move(ri)};
    Int g = out.content();
    std::vector<Int> norm(out.coeffs());
    for (auto& x : norm) x /= g;
    return IntPoly(std::move(norm));
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = a.is_zero() ? IntPoly() : a.primitive_part();
    IntPoly y = b.is_zero() ? IntPoly() : b.primitive_part();
    while (!y.is_zero()) {
        if (y.degree() == 0) return IntPoly({1});
        IntPoly r = signed_primitive_remainder(x, y);
        x = y;
        y = r;
    }
    return x.is_zero() ? IntPoly() : x.primitive_part();
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) return IntPoly();
    if (p.degree() == 0) return IntPoly({1});
    IntPoly g = poly_gcd(p, p.derivative());
    auto q = divide_exact(p.primitive_part(), g);
    if (!q) throw internal_error("squarefree division not exact");
    return q->primitive_part();
}

IntPoly poly_pow(const IntPoly& p, unsigned e) {
    IntPoly r({1});
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

} // namespace nk
