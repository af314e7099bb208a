#ifndef NK_MAB_HPP
#define NK_MAB_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nk/kummer.hpp"
#include "nk/matrix.hpp"

namespace nk {

// Long-exact-sequence bookkeeping for the fibered 5-manifold N: in each
// even surface degree, the kernel of (g - 1) gives the even Betti number
// and the cokernel the next odd one.
struct WangProfile {
    std::array<std::size_t, 3> kernelDim;   // surface degrees 0, 2, 4
    std::array<std::size_t, 3> cokernelDim; // same degrees
    std::array<std::size_t, 6> bettiN;      // b_0 .. b_5 of N
};

WangProfile wang_cohomology(const KummerAction& act);

// Rational cohomology ring of S^1 x N with the fixed degree-2 subspace V:
// exterior generators s1, s2 in degree 1, V in degree 2, kappa in degree
// 4, and v_i * v_j = <v_i, v_j> * kappa. Products of basis elements are
// single scaled basis elements, kept in a dense table.
class MabRing {
public:
    struct Term {
        Rat coeff;       // zero means the product vanishes
        std::size_t idx; // meaningful only when coeff != 0
    };

    static MabRing from_subspace(std::vector<std::vector<Rat>> vbasis, const QMat& pairing);

    std::size_t m() const { return m_; }
    std::size_t dimension() const { return 8 + 4 * m_; }
    int degree_of(std::size_t idx) const;
    std::size_t degree_offset(int deg) const;
    std::size_t degree_dim(int deg) const;
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<Rat>>& vbasis() const { return vbasis_; }
    const QMat& gram() const { return gram_; }
    std::array<std::size_t, 7> betti() const;

    Term mul_basis(std::size_t i, std::size_t j) const { return table_[i * dimension() + j]; }
    std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) const;

private:
    MabRing() = default;
    std::size_t m_ = 0;
    std::vector<std::vector<Rat>> vbasis_;
    QMat gram_;
    std::vector<std::string> labels_;
    std::vector<Term> table_;
};

// Gate: |tr(a)|^2 > 4. V is the fixed subspace of the degree-2 action,
// paired by the standard form.
MabRing build_mab_ring(const GaussianMatrix2& a);

// The symplectic class [w] = s1 s2 + theta. d is the rational with
// theta^2 = d * kappa (normalization-dependent; 2 for the standard form).
struct SymplecticClass {
    std::vector<Rat> thetaInV;
    Rat d;
};

SymplecticClass symplectic_class(const MabRing& ring);

// Coordinates of s1 s2 + theta as a degree-2 element of the ring.
std::vector<Rat> omega_element(const MabRing& ring, const SymplecticClass& w);

struct LefschetzMap {
    int j;
    std::size_t domainDim;
    std::size_t codomainDim;
    std::size_t rank;
    bool isomorphism;
};

struct LefschetzReport {
    std::array<LefschetzMap, 3> maps; // j = 1, 2, 3
    bool allIsomorphisms;
};

// Exact ranks of multiplication by [w]^j : H^{3-j} -> H^{3+j}.
LefschetzReport hard_lefschetz(const MabRing& ring, const SymplecticClass& w);

// Certified statement that the circle-fiber product is an isomorphism
// H^{2j}(N) -> H^{2j+1}(N) for j = 0, 1, 2; the j = 1 case is equivalent
// to eigenvalue-1 semisimplicity of the degree-2 action, and together
// with b_1(N) = 1 it pins the rational homotopy type in dimension 5.
struct FormalityWitness {
    bool b1Equals1;
    std::array<bool, 3> cupIso; // j = 0, 1, 2
    bool semisimpleAt1;
    bool holds;
    std::string justification;
};

FormalityWitness formality_witness(const GaussianMatrix2& a);
FormalityWitness formality_witness_from_h2(const QMat& h2action);

} // namespace nk

#endif
