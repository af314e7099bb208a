#ifndef NK_KUMMER_HPP
#define NK_KUMMER_HPP

#include <array>
#include <vector>

#include "nk/cyclotomic.hpp"
#include "nk/matrix.hpp"
#include "nk/numeric.hpp"
#include "nk/sturm.hpp"

namespace nk {

// Element of SL(2, Z[i]). Construction rejects any other determinant.
class GaussianMatrix2 {
public:
    GaussianMatrix2(GaussianInt a11, GaussianInt a12, GaussianInt a21, GaussianInt a22);

    static GaussianMatrix2 identity();

    const GaussianInt& at(int i, int j) const { return e_[i][j]; }
    GaussianInt trace() const { return e_[0][0] + e_[1][1]; }
    Int trace_norm_sq() const { return trace().norm(); }

    GaussianMatrix2 operator-() const;
    bool operator==(const GaussianMatrix2& o) const;

private:
    GaussianInt e_[2][2];
};

// 4x4 integer matrix of the action on (x1, x2, x3, x4) where
// z1 = x1 + i x2, z2 = x3 + i x4; each entry x+yi becomes [[x,-y],[y,x]].
IMat realify(const GaussianMatrix2& a);

// Index j -> index of the image of the j-th two-torsion point. Points are
// the pairs (u, v), u, v in {0, i, 1, 1+i}, ordered by (re u, im u, re v,
// im v); the image of (u, v) is a*(u, v)^T mod 2Z[i].
std::array<int, 16> two_torsion_permutation(const GaussianMatrix2& a);

// Ascending orbit lengths.
std::vector<int> cycle_type(const std::array<int, 16>& perm);

// Pullback on alternating 2-forms in the ordered basis (e1^e2, e1^e3,
// e1^e4, e2^e3, e2^e4, e3^e4): entry at row (k,l), column (i,j) is the
// (i,j)x(k,l) minor of m.
IMat exterior_square_pullback(const IMat& m);

// Degree-2 action split into the sixteen exceptional classes (inverse
// image permutation: block[j][perm[j]] = 1) and the six form classes.
struct KummerAction {
    std::array<int, 16> pointPermutation;
    IMat permBlock; // 16x16
    IMat extBlock;  // 6x6
    IMat matrix;    // 22x22 block diagonal
};

KummerAction kummer_action(const GaussianMatrix2& a);

// Pairing on the 22-dimensional degree-2 space: (-2)*I on exceptional
// classes, the wedge pairing against e1^e2^e3^e4 on form classes. The
// scaled variant multiplies each block, for scale-invariance checks.
QMat intersection_form();
QMat intersection_form_scaled(const Rat& divisorScale, const Rat& torusScale);

// Coordinates of the real and imaginary parts of the holomorphic 2-form
// in the 22-dimensional basis.
std::vector<Rat> theta_vector();
std::vector<Rat> eta_vector();

struct FixedSubspace {
    std::size_t dim;
    std::vector<std::vector<Rat>> basis; // reduced echelon form
};

FixedSubspace fixed_subspace(const KummerAction& act);

// Spectral summary of the degree-2 action: characteristic polynomial,
// its root-of-unity part, semisimplicity at eigenvalue 1, and certified
// intervals for the reciprocal pair of non-unit real eigenvalues when
// they exist.
struct EigenProfile {
    IntPoly charPoly;
    CyclotomicSplit split;
    bool semisimpleAt1 = false;
    bool hasNonUnitPair = false;
    IsolatingInterval rootAbove1; // lo > 1 when hasNonUnitPair
    IsolatingInterval rootBelow1; // hi < 1 when hasNonUnitPair
};

EigenProfile eigen_profile(const KummerAction& act, const Rat& refineWidth = Rat(1, 1000));

} // namespace nk

#endif
