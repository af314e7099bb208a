#include "nk/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace nk {

std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Rat inv = Rat(1) / m(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rat>> kernel_basis(const QMat& m) {
    QMat r = m;
    auto pivots = rref(r);
    std::vector<bool> isPivot(m.cols(), false);
    for (auto c : pivots) isPivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (isPivot[f]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rat>> echelon_basis(const std::vector<std::vector<Rat>>& vecs) {
    if (vecs.empty()) return {};
    QMat m(vecs.size(), vecs[0].size());
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < vecs[i].size(); ++j) m(i, j) = vecs[i][j];
    auto pivots = rref(m);
    std::vector<std::vector<Rat>> out(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        out[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    }
    return out;
}

IntPoly char_poly(const IMat& a) {
    if (a.rows() != a.cols()) throw domain_error("char_poly requires a square matrix");
    std::size_t n = a.rows();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    IMat m = IMat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IMat am = a * m;
        Int tr = am.trace();
        if (tr % Int(k) != 0) throw internal_error("trace not divisible in char_poly recursion");
        Int ck = -tr / Int(k);
        c[n - k] = ck;
        m = am;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
    }
    return IntPoly(std::move(c));
}

std::vector<Rat> char_poly(const QMat& a) {
    if (a.rows() != a.cols()) throw domain_error("char_poly requires a square matrix");
    std::size_t n = a.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    QMat m = QMat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        QMat am = a * m;
        Rat ck = -am.trace() / Rat(k);
        c[n - k] = ck;
        m = am;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
    }
    return c;
}

std::pair<int, int> signature(const QMat& q) {
    if (q.rows() != q.cols()) throw domain_error("signature requires a square matrix");
    QMat m = q;
    std::size_t n = m.rows();
    std::vector<bool> done(n, false);
    int pos = 0, neg = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && m(i, i) != 0) { piv = i; break; }
        if (piv == n) {
            // No nonzero diagonal left: fold an off-diagonal entry onto it.
            std::size_t a = n, b = n;
            for (std::size_t i = 0; i < n && a == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (done[j]) continue;
                    if (m(i, j) != 0) { a = i; b = j; break; }
                }
            }
            if (a == n) break; // remaining block is zero (degenerate form)
            for (std::size_t j = 0; j < n; ++j) m(a, j) += m(b, j);
            for (std::size_t i = 0; i < n; ++i) m(i, a) += m(i, b);
            piv = a;
        }
        Rat d = m(piv, piv);
        if (d > 0) ++pos; else ++neg;
        done[piv] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || m(i, piv) == 0) continue;
            Rat f = m(i, piv) / d;
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(piv, j);
            for (std::size_t j = 0; j < n; ++j) m(j, i) -= f * m(j, piv);
        }
    }
    return {pos, neg};
}

} // namespace nk
