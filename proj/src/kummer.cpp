#include "nk/kummer.hpp"

#include <algorithm>

#include "nk/errors.hpp"

namespace nk {

GaussianMatrix2::GaussianMatrix2(GaussianInt a11, GaussianInt a12, GaussianInt a21,
                                 GaussianInt a22) {
    e_[0][0] = std::move(a11);
    e_[0][1] = std::move(a12);
    e_[1][0] = std::move(a21);
    e_[1][1] = std::move(a22);
    GaussianInt det = e_[0][0] * e_[1][1] - e_[0][1] * e_[1][0];
    if (!(det == GaussianInt(1, 0)))
        throw domain_error("matrix determinant must be 1, got " + to_string(det));
}

GaussianMatrix2 GaussianMatrix2::identity() {
    return GaussianMatrix2({1, 0}, {0, 0}, {0, 0}, {1, 0});
}

GaussianMatrix2 GaussianMatrix2::operator-() const {
    return GaussianMatrix2(-e_[0][0], -e_[0][1], -e_[1][0], -e_[1][1]);
}

bool GaussianMatrix2::operator==(const GaussianMatrix2& o) const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (e_[i][j] != o.e_[i][j]) return false;
    return true;
}

IMat realify(const GaussianMatrix2& a) {
    IMat m(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const GaussianInt& g = a.at(i, j);
            m(2 * i, 2 * j) = g.re;
            m(2 * i, 2 * j + 1) = -g.im;
            m(2 * i + 1, 2 * j) = g.im;
            m(2 * i + 1, 2 * j + 1) = g.re;
        }
    return m;
}

namespace {

// Residues ordered 0, i, 1, 1+i: index 2*re + im.
int residue_index(const GaussianInt& g) {
    GaussianInt r = g.mod2();
    return 2 * static_cast<int>(r.re) + static_cast<int>(r.im);
}

GaussianInt residue_of(int idx) { return {idx >> 1, idx & 1}; }

} // namespace

std::array<int, 16> two_torsion_permutation(const GaussianMatrix2& a) {
    std::array<int, 16> out{};
    for (int cu = 0; cu < 4; ++cu)
        for (int cv = 0; cv < 4; ++cv) {
            GaussianInt u = residue_of(cu), v = residue_of(cv);
            GaussianInt iu = a.at(0, 0) * u + a.at(0, 1) * v;
            GaussianInt iv = a.at(1, 0) * u + a.at(1, 1) * v;
            out[4 * cu + cv] = 4 * residue_index(iu) + residue_index(iv);
        }
    return out;
}

std::vector<int> cycle_type(const std::array<int, 16>& perm) {
    std::vector<bool> seen(16, false);
    std::vector<int> lens;
    for (int s = 0; s < 16; ++s) {
        if (seen[s]) continue;
        int len = 0, cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = perm[cur];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

} // namespace

IMat exterior_square_pullback(const IMat& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw domain_error("exterior square expects a 4x4 matrix");
    IMat e(6, 6);
    for (int r = 0; r < 6; ++r) {
        int k = kPairs[r][0], l = kPairs[r][1];
        for (int c = 0; c < 6; ++c) {
            int i = kPairs[c][0], j = kPairs[c][1];
            e(r, c) = m(i, k) * m(j, l) - m(i, l) * m(j, k);
        }
    }
    return e;
}

KummerAction kummer_action(const GaussianMatrix2& a) {
    KummerAction act;
    act.pointPermutation = two_torsion_permutation(a);
    act.permBlock = IMat(16, 16);
    for (int j = 0; j < 16; ++j) act.permBlock(j, act.pointPermutation[j]) = 1;
    act.extBlock = exterior_square_pullback(realify(a));
    act.matrix = IMat(22, 22);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) act.matrix(i, j) = act.permBlock(i, j);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) act.matrix(16 + i, 16 + j) = act.extBlock(i, j);
    return act;
}

namespace {

// Wedge pairing of the six basis 2-forms against e1^e2^e3^e4.
constexpr int kWedge[6][6] = {
    {0, 0, 0, 0, 0, 1},  {0, 0, 0, 0, -1, 0}, {0, 0, 0, 1, 0, 0},
    {0, 0, 1, 0, 0, 0},  {0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
};

} // namespace

QMat intersection_form_scaled(const Rat& divisorScale, const Rat& torusScale) {
    if (divisorScale <= 0 || torusScale <= 0)
        throw domain_error("intersection form block scales must be positive");
    QMat q(22, 22);
    for (int i = 0; i < 16; ++i) q(i, i) = Rat(-2) * divisorScale;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) q(16 + i, 16 + j) = Rat(kWedge[i][j]) * torusScale;
    return q;
}

QMat intersection_form() { return intersection_form_scaled(Rat(1), Rat(1)); }

std::vector<Rat> theta_vector() {
    std::vector<Rat> v(22, Rat(0));
    v[16 + 1] = 1;  // e1^e3
    v[16 + 4] = -1; // e2^e4
    return v;
}

std::vector<Rat> eta_vector() {
    std::vector<Rat> v(22, Rat(0));
    v[16 + 2] = 1; // e1^e4
    v[16 + 3] = 1; // e2^e3
    return v;
}

FixedSubspace fixed_subspace(const KummerAction& act) {
    QMat gmi = to_rational(act.matrix) - QMat::identity(22);
    auto basis = echelon_basis(kernel_basis(gmi));
    return {basis.size(), std::move(basis)};
}

EigenProfile eigen_profile(const KummerAction& act, const Rat& refineWidth) {
    if (refineWidth <= 0) throw domain_error("refinement width must be positive");
    EigenProfile p;
    p.charPoly = char_poly(act.matrix);
    p.split = cyclotomic_split(p.charPoly);

    QMat gmi = to_rational(act.matrix) - QMat::identity(22);
    std::size_t k1 = kernel_basis(gmi).size();
    std::size_t k2 = kernel_basis(gmi * gmi).size();
    p.semisimpleAt1 = (k1 == k2);

    p.hasNonUnitPair = p.split.rest.degree() > 0;
    if (p.hasNonUnitPair) {
        auto roots = sturm_isolate_real_roots(p.split.rest);
        if (roots.size() != 2)
            throw internal_error("expected exactly one reciprocal pair of real roots");
        IsolatingInterval below = roots.front(), above = roots.back();
        while (!(above.lo > 1)) above = refine_interval(above, above.width() / 2);
        while (!(below.hi < 1)) below = refine_interval(below, below.width() / 2);
        p.rootAbove1 = refine_interval(above, refineWidth);
        p.rootBelow1 = refine_interval(below, refineWidth);
    }
    return p;
}

} // namespace nk
