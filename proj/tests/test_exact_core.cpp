#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <eigen3/Eigen/Dense>

#include "nk/cyclotomic.hpp"
#include "nk/matrix.hpp"
#include "nk/numeric.hpp"
#include "nk/polynomial.hpp"
#include "nk/sturm.hpp"

using namespace nk;

namespace {

// Test-local expansion oracle, independent of IntPoly::operator*.
std::vector<long long> conv(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

IntPoly from_ll(const std::vector<long long>& v) {
    std::vector<Int> c;
    for (auto x : v) c.emplace_back(x);
    return IntPoly(c);
}

double mid(const IsolatingInterval& iv) {
    return ((iv.lo + iv.hi) / 2).convert_to<double>();
}

// Distinct real roots of p counted through its companion matrix.
int float_real_root_count(const IntPoly& p) {
    int n = p.degree();
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    double lead = p.leading().convert_to<double>();
    for (int i = 0; i < n; ++i) {
        c(i, n - 1) = -p.coeff(i).convert_to<double>() / lead;
        if (i + 1 < n) c(i + 1, i) = 1.0;
    }
    Eigen::VectorXcd ev = c.eigenvalues();
    std::vector<double> reals;
    for (int i = 0; i < n; ++i) {
        std::complex<double> z = ev(i);
        if (std::abs(z.imag()) <= 1e-6 * std::max(1.0, std::abs(z))) reals.push_back(z.real());
    }
    std::sort(reals.begin(), reals.end());
    int distinct = 0;
    for (size_t i = 0; i < reals.size(); ++i)
        if (i == 0 || reals[i] - reals[i - 1] > 1e-6 * std::max(1.0, std::abs(reals[i]))) ++distinct;
    return distinct;
}

IMat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    IMat m(rows.size(), rows.begin()->size());
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("gaussian integer arithmetic") {
    GaussianInt a(2, 1), b(1, -3);
    CHECK((a * b) == GaussianInt(5, -5));
    CHECK((a + b) == GaussianInt(3, -2));
    CHECK((-a) == GaussianInt(-2, -1));
    CHECK(a.conj() == GaussianInt(2, -1));
    CHECK(a.norm() == 5);
    CHECK(GaussianInt(-1, 4).mod2() == GaussianInt(1, 0));
    CHECK(GaussianInt(-3, -2).mod2() == GaussianInt(1, 0));
    CHECK(GaussianInt(2, 2).mod2() == GaussianInt(0, 0));
}

TEST_CASE("integer polynomial canonical form and arithmetic") {
    CHECK(IntPoly({0, 0, 0}).is_zero());
    CHECK(IntPoly({5}).degree() == 0);
    CHECK(IntPoly({-1, 1}).degree() == 1);

    IntPoly p({1, -3, 1});
    CHECK((p * p) == IntPoly({1, -6, 11, -6, 1}));

    std::mt19937 rng(7001);
    std::uniform_int_distribution<int> coef(-9, 9), deg(0, 6);
    for (int it = 0; it < 50; ++it) {
        std::vector<long long> a(deg(rng) + 1), b(deg(rng) + 1);
        for (auto& x : a) x = coef(rng);
        for (auto& x : b) x = coef(rng);
        a.back() = a.back() ? a.back() : 1;
        b.back() = b.back() ? b.back() : 1;
        CHECK((from_ll(a) * from_ll(b)) == from_ll(conv(a, b)));
    }

    CHECK(IntPoly({-6, 2, -4}).content() == 2);
    CHECK(IntPoly({-6, 2, -4}).primitive_part() == IntPoly({3, -1, 2}));
    CHECK(IntPoly({2, -2}).primitive_part() == IntPoly({-1, 1}));

    auto q = divide_exact(IntPoly({1, -6, 11, -6, 1}), p);
    REQUIRE(q.has_value());
    CHECK(*q == p);
    CHECK(!divide_exact(IntPoly({1, -6, 11, -6, 1}), IntPoly({1, 1})).has_value());

    CHECK(poly_gcd(IntPoly({-2, 1}) * p, IntPoly({-2, 1}) * IntPoly({5, 1})) == IntPoly({-2, 1}));
    CHECK(squarefree_part(IntPoly({-1, 1}) * IntPoly({-1, 1}) * IntPoly({2, 1})) ==
          IntPoly({-1, 1}) * IntPoly({2, 1}));

    CHECK(IntPoly({1, -7, 1}).is_self_reciprocal());
    CHECK(IntPoly({-1, 7, -7, 1}).is_self_reciprocal()); // reversed = -p
    CHECK(!IntPoly({2, -7, 1}).is_self_reciprocal());
}

TEST_CASE("char_poly on frozen examples") {
    CHECK(char_poly(IMat::identity(3)) == IntPoly({-1, 3, -3, 1}));

    // Companion matrix of t^2 - 3t + 1.
    CHECK(char_poly(from_rows({{0, -1}, {1, 3}})) == IntPoly({1, -3, 1}));

    // Real 2x2 embedded block-diagonally twice: square of its own char poly.
    IMat r4 = from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 2, 0}, {0, 1, 0, 2}});
    CHECK(char_poly(r4) == from_ll(conv({1, -3, 1}, {1, -3, 1})));

    // Complex trace 2+i: product of the conjugate quadratics.
    {
        // (t^2 - (2+i)t + 1)(t^2 - (2-i)t + 1) expanded with complex arithmetic.
        std::vector<std::complex<long long>> f = {{1, 0}, {-2, -1}, {1, 0}};
        std::vector<std::complex<long long>> g = {{1, 0}, {-2, 1}, {1, 0}};
        std::vector<std::complex<long long>> prod(5, {0, 0});
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) prod[i + j] += f[i] * g[j];
        std::vector<long long> re;
        for (auto z : prod) {
            CHECK(z.imag() == 0);
            re.push_back(z.real());
        }
        CHECK(from_ll(re) == IntPoly({1, -4, 7, -4, 1}));
    }

    // Rational path agrees with the integer path.
    {
        IMat m = from_rows({{2, -1, 0}, {4, 0, 1}, {0, 3, -2}});
        auto pz = char_poly(m);
        auto pq = char_poly(to_rational(m));
        REQUIRE(pq.size() == 4);
        for (int k = 0; k <= 3; ++k) CHECK(Rat(pz.coeff(k)) == pq[k]);
    }

    // Newton's identity between coefficients and power traces.
    std::mt19937 rng(7002);
    std::uniform_int_distribution<int> ent(-3, 3);
    for (int it = 0; it < 20; ++it) {
        size_t n = 5;
        IMat m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m(i, j) = ent(rng);
        IntPoly p = char_poly(m);
        std::vector<Int> s(n + 1, 0);
        IMat pw = IMat::identity(n);
        for (size_t j = 1; j <= n; ++j) {
            pw = pw * m;
            s[j] = pw.trace();
        }
        for (size_t j = 1; j <= n; ++j) {
            Int acc = s[j];
            for (size_t i = 1; i < j; ++i) acc += p.coeff(static_cast<int>(n - i)) * s[j - i];
            acc += Int(j) * p.coeff(static_cast<int>(n - j));
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("kernel_basis canonical form") {
    {
        QMat z(3, 3);
        auto k = kernel_basis(z);
        REQUIRE(k.size() == 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) CHECK(k[i][j] == Rat(i == j ? 1 : 0));
    }
    {
        QMat m(2, 2);
        m(0, 0) = 1; m(0, 1) = 2; m(1, 0) = 2; m(1, 1) = 4;
        auto k = kernel_basis(m);
        REQUIRE(k.size() == 1);
        CHECK(k[0][0] == Rat(-2));
        CHECK(k[0][1] == Rat(1));
    }
    {
        auto k = kernel_basis(to_rational(IMat::identity(4) - IMat::identity(4)));
        CHECK(k.size() == 4);
    }
    // Exactness and rank-nullity on random rational matrices.
    std::mt19937 rng(7003);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), dim(1, 6);
    for (int it = 0; it < 40; ++it) {
        size_t r = dim(rng), c = dim(rng);
        QMat m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m(i, j) = Rat(num(rng), den(rng));
        auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == c);
        for (const auto& v : k) {
            for (size_t i = 0; i < r; ++i) {
                Rat dot(0);
                for (size_t j = 0; j < c; ++j) dot += m(i, j) * v[j];
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("sturm isolation on frozen examples") {
    CHECK(sturm_isolate_real_roots(IntPoly({1, 0, 1})).empty());

    {
        auto ivs = sturm_isolate_real_roots(IntPoly({1, -7, 1}));
        REQUIRE(ivs.size() == 2);
        auto a = refine_interval(ivs[0], Rat(1, 1000));
        auto b = refine_interval(ivs[1], Rat(1, 1000));
        CHECK(a.width() < Rat(1, 1000));
        CHECK(b.width() < Rat(1, 1000));
        CHECK(a.lo > 0);
        CHECK(a.hi < 1);
        CHECK(b.lo > 6);
        CHECK(b.hi < 7);
        CHECK(std::abs(mid(a) - 0.1458980338) < 1e-3);
        CHECK(std::abs(mid(b) - 6.8541019662) < 1e-3);
    }
    {
        auto ivs = sturm_isolate_real_roots(IntPoly({1, -2, 1}));
        REQUIRE(ivs.size() == 1);
        CHECK(ivs[0].contains(Rat(1)));
        auto fine = refine_interval(ivs[0], Rat(1, 1 << 20));
        CHECK(fine.contains(Rat(1)));
        CHECK(fine.width() < Rat(1, 1 << 20));
    }
    {
        auto ivs = sturm_isolate_real_roots(IntPoly({0, -2, 0, 1})); // t(t^2 - 2)
        REQUIRE(ivs.size() == 3);
        CHECK(ivs[0].hi <= ivs[1].lo);
        CHECK(ivs[1].hi <= ivs[2].lo);
        CHECK(ivs[1].contains(Rat(0)));
    }

    // Count of distinct real roots agrees with a companion-matrix solve.
    std::mt19937 rng(7004);
    std::uniform_int_distribution<int> coef(-50, 50), deg(1, 8);
    int cases = 0;
    while (cases < 60) {
        std::vector<Int> c(deg(rng) + 1);
        for (auto& x : c) x = coef(rng);
        if (c.back() == 0) continue;
        IntPoly p{c};
        if (squarefree_part(p).degree() != p.degree()) continue;
        ++cases;
        CHECK(static_cast<int>(sturm_isolate_real_roots(p).size()) == float_real_root_count(p));
    }
}

TEST_CASE("cyclotomic generation and split") {
    CHECK(cyclotomic(1) == IntPoly({-1, 1}));
    CHECK(cyclotomic(2) == IntPoly({1, 1}));
    CHECK(cyclotomic(4) == IntPoly({1, 0, 1}));
    CHECK(cyclotomic(5) == IntPoly({1, 1, 1, 1, 1}));
    CHECK(cyclotomic(6) == IntPoly({1, -1, 1}));
    CHECK(cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
    for (unsigned n = 1; n <= 30; ++n)
        CHECK(cyclotomic(n).degree() == static_cast<int>(euler_phi(n)));

    {
        auto s = cyclotomic_split(cyclotomic(5));
        CHECK(s.rest == IntPoly({1}));
        CHECK(s.cyclotomicPart == cyclotomic(5));
        REQUIRE(s.multiplicities.size() == 1);
        CHECK(s.multiplicities.at(5) == 1);
    }
    {
        auto s = cyclotomic_split(IntPoly({1, -7, 1}));
        CHECK(s.cyclotomicPart == IntPoly({1}));
        CHECK(s.rest == IntPoly({1, -7, 1}));
        CHECK(s.multiplicities.empty());
    }
    {
        auto p = poly_pow(IntPoly({-1, 1}), 4) * IntPoly({1, -7, 1});
        auto s = cyclotomic_split(p);
        CHECK(s.cyclotomicPart == poly_pow(IntPoly({-1, 1}), 4));
        CHECK(s.rest == IntPoly({1, -7, 1}));
        REQUIRE(s.multiplicities.size() == 1);
        CHECK(s.multiplicities.at(1) == 4);
    }

    // Reconstruction: a planted product of cyclotomics and a planted
    // non-cyclotomic factor split back into exactly those pieces.
    std::mt19937 rng(7005);
    std::uniform_int_distribution<int> pick(1, 20), expo(1, 2), which(0, 2);
    const IntPoly rests[3] = {IntPoly({1}), IntPoly({1, -7, 1}), IntPoly({1, -5, 4, -5, 1})};
    for (int it = 0; it < 30; ++it) {
        std::map<unsigned, int> planted;
        IntPoly p = rests[which(rng)];
        IntPoly expectRest = p;
        int factors = 1 + (it % 3);
        for (int f = 0; f < factors; ++f) {
            unsigned n = pick(rng);
            int e = expo(rng);
            planted[n] += e;
            p = p * poly_pow(cyclotomic(n), e);
        }
        auto s = cyclotomic_split(p);
        CHECK(s.rest == expectRest);
        CHECK(s.multiplicities == planted);
        CHECK(s.cyclotomicPart * s.rest == p);
    }
}

TEST_CASE("quasi-unipotent detection") {
    CHECK(is_quasi_unipotent(IMat::identity(4)));
    CHECK(is_quasi_unipotent(from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})));
    CHECK(is_quasi_unipotent(from_rows({{1, 1}, {0, 1}})));
    CHECK(!is_quasi_unipotent(from_rows({{1, 1}, {1, 2}})));
    // Companion matrix of Phi_10 = t^4 - t^3 + t^2 - t + 1.
    CHECK(is_quasi_unipotent(from_rows({{0, 0, 0, -1}, {1, 0, 0, 1}, {0, 1, 0, -1}, {0, 0, 1, 1}})));

    // Cross-validation against float spectra plus a power-growth guard.
    std::mt19937 rng(7006);
    std::uniform_int_distribution<int> ent(-2, 2);
    int disagreements = 0;
    for (int it = 0; it < 200; ++it) {
        IMat m(4, 4);
        Eigen::MatrixXd f(4, 4);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) {
                int v = ent(rng);
                m(i, j) = v;
                f(i, j) = v;
            }
        Eigen::VectorXcd ev = f.eigenvalues();
        bool onCircle = true;
        for (int i = 0; i < 4; ++i)
            if (std::abs(std::abs(std::complex<double>(ev(i))) - 1.0) > 1e-6) onCircle = false;
        bool bounded = true;
        if (onCircle) {
            const Int cap = Int("1000000000000000");
            IMat pw = IMat::identity(4);
            for (int k = 1; k <= 240 && bounded; ++k) {
                pw = pw * m;
                for (size_t i = 0; i < 4 && bounded; ++i)
                    for (size_t j = 0; j < 4; ++j)
                        if (abs(pw(i, j)) > cap) { bounded = false; break; }
            }
        }
        if (is_quasi_unipotent(m) != (onCircle && bounded)) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("largest real root comparison") {
    IntPoly p({1, -7, 1});
    {
        auto c = compare_largest_real_roots(p, p);
        CHECK(c.order == RootOrder::Equal);
        CHECK(!c.commonFactor.is_zero());
        CHECK(c.commonFactor.degree() >= 1);
    }
    CHECK(compare_largest_real_roots(p, IntPoly({1, -14, 1})).order == RootOrder::Less);
    CHECK(compare_largest_real_roots(IntPoly({1, -14, 1}), p).order == RootOrder::Greater);
    {
        // Largest roots both 2, through polynomials of different degree.
        auto c = compare_largest_real_roots(IntPoly({-2, 1}), IntPoly({2, -3, 1}));
        CHECK(c.order == RootOrder::Equal);
        CHECK(c.commonFactor == IntPoly({-2, 1}));
    }
    {
        // Shared irrational largest root with an extra rational root mixed in.
        auto c = compare_largest_real_roots(p, p * IntPoly({-3, 1}));
        CHECK(c.order == RootOrder::Equal);
    }
    // (7 + 3 sqrt 5)/2 = 6.85410... vs 48/7 = 6.85714...
    CHECK(compare_largest_real_roots(p, IntPoly({-48, 7})).order == RootOrder::Less);

    CHECK_THROWS_AS(compare_largest_real_roots(IntPoly({1, 0, 1}), p), domain_error);
    CHECK_THROWS_AS(compare_largest_real_roots(p, IntPoly({2, 1})), domain_error);
}
