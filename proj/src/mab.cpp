#include "nk/mab.hpp"

#include <cstddef>
#include <string>

#include "nk/errors.hpp"

namespace nk {

namespace {

// Basis element = (subset of {s1, s2} as a 2-bit mask, fiber part).
// Fiber 0 is the unit, 1..m are the v_k, m+1 is kappa.
std::size_t index_of(unsigned mask, std::size_t fiber, std::size_t m) {
    if (fiber == 0) return mask == 0 ? 0 : mask == 1 ? 1 : mask == 2 ? 2 : 3;
    if (fiber <= m) return 3 + mask * m + fiber;
    return 4 + 4 * m + mask;
}

int fiber_degree(std::size_t fiber, std::size_t m) {
    if (fiber == 0) return 0;
    return fiber <= m ? 2 : 4;
}

int popcount2(unsigned mask) { return (mask & 1) + ((mask >> 1) & 1); }

std::size_t cokernel_dim(const QMat& g) {
    QMat gmi = g - QMat::identity(g.rows());
    return g.rows() - rank(gmi);
}

// Cup product with the circle class on a Wang pair is an isomorphism
// exactly when ker(g - 1) and im(g - 1) together span everything.
bool circle_cup_is_iso(const QMat& g) {
    const std::size_t n = g.rows();
    const QMat gmi = g - QMat::identity(n);
    std::vector<std::vector<Rat>> rows = kernel_basis(gmi);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rat> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = gmi(i, j);
        rows.push_back(std::move(col));
    }
    QMat stacked(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(i, j) = rows[i][j];
    return rank(stacked) == n;
}

bool semisimple_at_one(const QMat& g) {
    const QMat gmi = g - QMat::identity(g.rows());
    return kernel_basis(gmi).size() == kernel_basis(gmi * gmi).size();
}

} // namespace

WangProfile wang_cohomology(const KummerAction& act) {
    WangProfile w{};
    const QMat one = QMat::identity(1);
    const QMat g2 = to_rational(act.matrix);
    w.kernelDim = {kernel_basis(one - QMat::identity(1)).size(),
                   kernel_basis(g2 - QMat::identity(22)).size(),
                   kernel_basis(one - QMat::identity(1)).size()};
    w.cokernelDim = {cokernel_dim(one), cokernel_dim(g2), cokernel_dim(one)};
    w.bettiN = {w.kernelDim[0], w.cokernelDim[0], w.kernelDim[1],
                w.cokernelDim[1], w.kernelDim[2], w.cokernelDim[2]};
    return w;
}

MabRing MabRing::from_subspace(std::vector<std::vector<Rat>> vbasis, const QMat& pairing) {
    if (pairing.rows() != pairing.cols()) throw domain_error("pairing must be square");
    for (const auto& v : vbasis)
        if (v.size() != pairing.rows())
            throw domain_error("subspace vectors must match the pairing dimension");

    MabRing r;
    r.m_ = vbasis.size();
    r.vbasis_ = std::move(vbasis);
    const std::size_t m = r.m_;

    r.gram_ = QMat(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rat acc(0);
            for (std::size_t a = 0; a < pairing.rows(); ++a)
                for (std::size_t b = 0; b < pairing.cols(); ++b)
                    acc += r.vbasis_[i][a] * pairing(a, b) * r.vbasis_[j][b];
            r.gram_(i, j) = acc;
        }

    const std::size_t D = 8 + 4 * m;
    const char* prefix[4] = {"", "s1*", "s2*", "s1s2*"};
    r.labels_.assign(D, "");
    r.labels_[0] = "1";
    r.labels_[1] = "s1";
    r.labels_[2] = "s2";
    r.labels_[3] = "s1s2";
    for (unsigned mask = 0; mask < 4; ++mask) {
        for (std::size_t k = 1; k <= m; ++k)
            r.labels_[index_of(mask, k, m)] = std::string(prefix[mask]) + "v" + std::to_string(k);
        r.labels_[index_of(mask, m + 1, m)] = std::string(prefix[mask]) + "kappa";
    }

    // Decode every index back to (mask, fiber) once.
    std::vector<unsigned> maskOf(D);
    std::vector<std::size_t> fiberOf(D);
    for (unsigned mask = 0; mask < 4; ++mask)
        for (std::size_t f = 0; f <= m + 1; ++f) {
            const std::size_t idx = index_of(mask, f, m);
            maskOf[idx] = mask;
            fiberOf[idx] = f;
        }

    r.table_.assign(D * D, Term{Rat(0), 0});
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) {
            const unsigned mi = maskOf[i], mj = maskOf[j];
            if (mi & mj) continue; // repeated exterior generator
            const std::size_t fi = fiberOf[i], fj = fiberOf[j];
            // Reordering the concatenated generators into s1 s2 order
            // transposes exactly when s2 comes first.
            const bool flip = ((mi >> 1) & 1) != 0 && (mj & 1) != 0;
            Rat coeff = flip ? Rat(-1) : Rat(1);
            std::size_t fout;
            if (fi == 0) {
                fout = fj;
            } else if (fj == 0) {
                fout = fi;
            } else if (fi <= m && fj <= m) {
                coeff *= r.gram_(fi - 1, fj - 1);
                fout = m + 1;
            } else {
                continue; // kappa annihilates every positive fiber degree
            }
            if (coeff == 0) continue;
            r.table_[i * D + j] = Term{coeff, index_of(mi | mj, fout, m)};
        }
    return r;
}

int MabRing::degree_of(std::size_t idx) const {
    const std::size_t m = m_;
    unsigned mask;
    std::size_t fiber;
    if (idx < 4) {
        mask = idx == 0 ? 0 : idx == 1 ? 1 : idx == 2 ? 2 : 3;
        fiber = 0;
    } else if (idx < 4 + 4 * m) {
        mask = static_cast<unsigned>((idx - 4) / m);
        fiber = (idx - 4) % m + 1;
    } else {
        mask = static_cast<unsigned>(idx - (4 + 4 * m));
        fiber = m + 1;
    }
    return popcount2(mask) + fiber_degree(fiber, m);
}

std::size_t MabRing::degree_offset(int deg) const {
    const std::size_t m = m_;
    switch (deg) {
        case 0: return 0;
        case 1: return 1;
        case 2: return 3;
        case 3: return 4 + m;
        case 4: return 4 + 3 * m;
        case 5: return 5 + 4 * m;
        case 6: return 7 + 4 * m;
        default: throw domain_error("degree out of range");
    }
}

std::size_t MabRing::degree_dim(int deg) const {
    const std::size_t m = m_;
    switch (deg) {
        case 0: case 6: return 1;
        case 1: case 5: return 2;
        case 2: case 4: return 1 + m;
        case 3: return 2 * m;
        default: throw domain_error("degree out of range");
    }
}

std::array<std::size_t, 7> MabRing::betti() const {
    std::array<std::size_t, 7> b{};
    for (int d = 0; d <= 6; ++d) b[d] = degree_dim(d);
    return b;
}

std::vector<Rat> MabRing::mul(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    const std::size_t D = dimension();
    if (a.size() != D || b.size() != D) throw domain_error("ring element has wrong dimension");
    std::vector<Rat> out(D, Rat(0));
    for (std::size_t i = 0; i < D; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < D; ++j) {
            if (b[j] == 0) continue;
            const Term& t = table_[i * D + j];
            if (t.coeff != 0) out[t.idx] += a[i] * b[j] * t.coeff;
        }
    }
    return out;
}

MabRing build_mab_ring(const GaussianMatrix2& a) {
    const Int n = a.trace_norm_sq();
    if (n <= 4)
        throw gate_error("ring requires |tr(A)| > 2, got |tr(A)|^2 = " + n.str());
    const FixedSubspace fs = fixed_subspace(kummer_action(a));
    return MabRing::from_subspace(fs.basis, intersection_form());
}

SymplecticClass symplectic_class(const MabRing& ring) {
    const std::vector<Rat> theta = theta_vector();
    const std::size_t m = ring.m();
    if (ring.vbasis().empty() || ring.vbasis().front().size() != theta.size())
        throw domain_error("ring is not built over the 22-dimensional degree-2 space");
    const std::size_t n = theta.size();

    QMat aug(n, m + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug(i, j) = ring.vbasis()[j][i];
        aug(i, m) = theta[i];
    }
    const std::vector<std::size_t> pivots = rref(aug);
    for (std::size_t p : pivots)
        if (p == m) throw internal_error("symplectic area class is not fixed by the action");

    SymplecticClass w;
    w.thetaInV.assign(m, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) w.thetaInV[pivots[r]] = aug(r, m);
    w.d = Rat(0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) w.d += w.thetaInV[i] * ring.gram()(i, j) * w.thetaInV[j];
    return w;
}

std::vector<Rat> omega_element(const MabRing& ring, const SymplecticClass& w) {
    if (w.thetaInV.size() != ring.m()) throw domain_error("class coordinates have wrong dimension");
    std::vector<Rat> omega(ring.dimension(), Rat(0));
    omega[ring.degree_offset(2)] = Rat(1); // s1 s2
    for (std::size_t k = 0; k < ring.m(); ++k) omega[ring.degree_offset(2) + 1 + k] = w.thetaInV[k];
    return omega;
}

LefschetzReport hard_lefschetz(const MabRing& ring, const SymplecticClass& w) {
    const std::vector<Rat> omega = omega_element(ring, w);
    LefschetzReport report{};
    std::vector<Rat> power = omega;
    for (int j = 1; j <= 3; ++j) {
        const int lo = 3 - j, hi = 3 + j;
        const std::size_t dn = ring.degree_dim(lo), dm = ring.degree_dim(hi);
        QMat map(dm, dn);
        for (std::size_t c = 0; c < dn; ++c) {
            std::vector<Rat> e(ring.dimension(), Rat(0));
            e[ring.degree_offset(lo) + c] = Rat(1);
            const std::vector<Rat> image = ring.mul(power, e);
            for (std::size_t r = 0; r < dm; ++r) map(r, c) = image[ring.degree_offset(hi) + r];
        }
        const std::size_t rk = rank(map);
        report.maps[j - 1] = LefschetzMap{j, dn, dm, rk, rk == dn && dn == dm};
        if (j < 3) power = ring.mul(power, omega);
    }
    report.allIsomorphisms =
        report.maps[0].isomorphism && report.maps[1].isomorphism && report.maps[2].isomorphism;
    return report;
}

FormalityWitness formality_witness_from_h2(const QMat& h2action) {
    if (h2action.rows() != h2action.cols()) throw domain_error("degree-2 action must be square");
    FormalityWitness f{};
    const QMat one = QMat::identity(1);
    f.cupIso = {circle_cup_is_iso(one), circle_cup_is_iso(h2action), circle_cup_is_iso(one)};
    f.semisimpleAt1 = semisimple_at_one(h2action);
    if (f.semisimpleAt1 != f.cupIso[1])
        throw internal_error("semisimplicity disagrees with the degree-2 cup isomorphism");
    f.b1Equals1 = cokernel_dim(one) == 1;
    f.holds = f.b1Equals1 && f.cupIso[0] && f.cupIso[1] && f.cupIso[2];
    if (f.holds) {
        f.justification =
            "b_1(N) = 1 and cup product with the circle class is an isomorphism "
            "H^{2j}(N) -> H^{2j+1}(N) for j = 0, 1, 2; the j = 1 case holds because "
            "the degree-2 action is semisimple at eigenvalue 1. These identities "
            "make N 2-formal, a closed 2-formal 5-manifold is formal, and formality "
            "is preserved by the product with a circle.";
    } else {
        f.justification =
            "the degree-2 action is not semisimple at eigenvalue 1, so cup product "
            "with the circle class fails to be an isomorphism in degree 2 and the "
            "2-formality argument does not apply.";
    }
    return f;
}

FormalityWitness formality_witness(const GaussianMatrix2& a) {
    return formality_witness_from_h2(to_rational(kummer_action(a).matrix));
}

} // namespace nk
