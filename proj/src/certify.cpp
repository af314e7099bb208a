#include "nk/certify.hpp"

#include <algorithm>
#include <string>

#include "nk/errors.hpp"
#include "nk/matrix.hpp"

namespace nk {

namespace {

void check_gate(const GaussianMatrix2& a, const char* task) {
    const Int n = a.trace_norm_sq();
    if (n <= 4)
        throw gate_error(std::string(task) + " requires |tr(A)| > 2, got |tr(A)|^2 = " + n.str());
}

IntPoly rest_factor(const IntPoly& charPoly) { return cyclotomic_split(charPoly).rest; }

} // namespace

NonkahlerCertificate certify_nonkahler(const GaussianMatrix2& a, const Rat& refineWidth) {
    check_gate(a, "certification");
    if (refineWidth <= 0) throw domain_error("refine width must be positive");
    const EigenProfile prof = eigen_profile(kummer_action(a), refineWidth);
    if (!prof.hasNonUnitPair)
        throw internal_error("gated matrix produced no non-unit eigenvalue pair");
    return NonkahlerCertificate{a,
                                a.trace_norm_sq(),
                                prof.charPoly,
                                prof.split.multiplicities,
                                prof.split.rest,
                                prof.rootAbove1,
                                refineWidth};
}

bool revalidate_certificate(const NonkahlerCertificate& cert) {
    try {
        if (cert.matrix.trace_norm_sq() != cert.traceNormSq) return false;
        if (cert.traceNormSq <= 4) return false;
        if (char_poly(kummer_action(cert.matrix).matrix) != cert.charPoly) return false;

        IntPoly acc({1});
        for (const auto& [n, e] : cert.cyclotomicMultiplicities) {
            if (e <= 0) return false;
            acc = acc * poly_pow(cyclotomic(n), static_cast<std::size_t>(e));
        }
        if (acc * cert.rest != cert.charPoly) return false;

        if (cert.rest.degree() < 1 || !cert.rest.is_monic()) return false;
        if (cyclotomic_split(cert.rest).cyclotomicPart.degree() != 0) return false;

        if (cert.witness.poly != cert.rest) return false;
        if (!(cert.witness.lo > 1)) return false;
        if (cert.witness.width() > cert.refineWidth) return false;
        if (SturmChain(cert.rest).count(cert.witness.lo, cert.witness.hi) != 1) return false;
        return true;
    } catch (...) {
        return false;
    }
}

HomotopyComparison compare_homotopy_types(const GaussianMatrix2& a, const GaussianMatrix2& b) {
    check_gate(a, "comparison");
    check_gate(b, "comparison");
    HomotopyComparison h{ComparisonVerdict::Distinct,
                         rest_factor(char_poly(kummer_action(a).matrix)),
                         rest_factor(char_poly(kummer_action(b).matrix)),
                         compare_largest_real_roots(
                             rest_factor(char_poly(kummer_action(a).matrix)),
                             rest_factor(char_poly(kummer_action(b).matrix))),
                         ""};
    if (h.radii.order == RootOrder::Equal) {
        h.verdict = ComparisonVerdict::InconclusiveEqualRadii;
        h.explanation =
            "the largest real degree-2 eigenvalues coincide, and the spectral radius "
            "alone cannot separate the homotopy types (a and -a always tie)";
    } else {
        h.verdict = ComparisonVerdict::Distinct;
        h.explanation =
            "the largest real degree-2 eigenvalues differ, so the mapping tori have "
            "non-isomorphic degree-2 rational cohomology actions";
    }
    return h;
}

JumpLociReport jump_loci(const GaussianMatrix2& a, const Rat& refineWidth) {
    if (refineWidth <= 0) throw domain_error("refine width must be positive");
    const KummerAction act = kummer_action(a);
    IMat full(24, 24);
    for (std::size_t i = 0; i < 22; ++i)
        for (std::size_t j = 0; j < 22; ++j) full(i, j) = act.matrix(i, j);
    full(22, 22) = 1;
    full(23, 23) = 1;

    JumpLociReport rep;
    rep.fullCharPoly = char_poly(full);
    const CyclotomicSplit split = cyclotomic_split(rep.fullCharPoly);
    rep.cyclotomicMultiplicities = split.multiplicities;
    rep.rest = split.rest;
    rep.restSelfReciprocal = rep.rest.is_self_reciprocal();
    if (rep.rest.degree() > 0)
        for (const IsolatingInterval& iv : sturm_isolate_real_roots(rep.rest))
            rep.realRoots.push_back(refine_interval(iv, refineWidth));
    return rep;
}

namespace {

GaussianMatrix2 matrix_of(const std::array<long long, 8>& k) {
    return GaussianMatrix2(GaussianInt(Int(k[0]), Int(k[1])), GaussianInt(Int(k[2]), Int(k[3])),
                           GaussianInt(Int(k[4]), Int(k[5])), GaussianInt(Int(k[6]), Int(k[7])));
}

FamilyEntry analyze_member(const std::array<long long, 8>& key, bool blockwise) {
    GaussianMatrix2 m = matrix_of(key);
    const KummerAction act = kummer_action(m);
    IntPoly rest = blockwise ? rest_factor(char_poly(act.extBlock))
                             : rest_factor(char_poly(act.matrix));
    return FamilyEntry{std::move(m), key, matrix_of(key).trace_norm_sq(), std::move(rest)};
}

FamilyReport scan_family(int height, bool blockwise) {
    if (height < 0) throw domain_error("height must be nonnegative");
    const long long side = 2LL * height + 1;
    const long long outer = side * side;
    long long inner = 1;
    for (int k = 0; k < 6; ++k) inner *= side;

    FamilyReport rep;
    rep.height = height;
    rep.scanned = static_cast<unsigned long long>(outer) * static_cast<unsigned long long>(inner);

    // Slices indexed by the two leading digits keep the output order
    // deterministic however the loop is scheduled.
    std::vector<std::vector<std::array<long long, 8>>> sliceKeys(outer);
    std::vector<unsigned long long> sliceUni(outer, 0), sliceGated(outer, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (blockwise)
#endif
    for (long long s = 0; s < outer; ++s) {
        const long long are = s / side - height;
        const long long aim = s % side - height;
        for (long long t = 0; t < inner; ++t) {
            long long digits[6];
            long long x = t;
            for (int d = 5; d >= 0; --d) {
                digits[d] = x % side - height;
                x /= side;
            }
            const long long bre = digits[0], bim = digits[1], cre = digits[2];
            const long long cim = digits[3], dre = digits[4], dim = digits[5];
            const long long detRe = are * dre - aim * dim - (bre * cre - bim * cim);
            const long long detIm = are * dim + aim * dre - (bre * cim + bim * cre);
            if (detRe != 1 || detIm != 0) continue;
            ++sliceUni[s];
            const long long trRe = are + dre, trIm = aim + dim;
            if (trRe * trRe + trIm * trIm <= 4) continue;
            ++sliceGated[s];
            const std::array<long long, 8> key{are, aim, bre, bim, cre, cim, dre, dim};
            std::array<long long, 8> neg{};
            for (int d = 0; d < 8; ++d) neg[d] = -key[d];
            if (key < neg) sliceKeys[s].push_back(key);
        }
    }

    std::vector<std::array<long long, 8>> keys;
    for (long long s = 0; s < outer; ++s) {
        rep.unimodular += sliceUni[s];
        rep.gated += sliceGated[s];
        keys.insert(keys.end(), sliceKeys[s].begin(), sliceKeys[s].end());
    }

    rep.entries.resize(keys.size(),
                       FamilyEntry{GaussianMatrix2::identity(), {}, Int(0), IntPoly({1})});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (blockwise)
#endif
    for (long long e = 0; e < static_cast<long long>(keys.size()); ++e)
        rep.entries[e] = analyze_member(keys[e], blockwise);

    std::map<IntPoly, std::vector<std::size_t>> byRest;
    for (std::size_t e = 0; e < rep.entries.size(); ++e)
        byRest[rep.entries[e].rest].push_back(e);
    for (auto& [restPoly, members] : byRest)
        rep.groups.push_back(FamilyGroup{restPoly, std::move(members)});
    return rep;
}

} // namespace

FamilyReport enumerate_family(int height) { return scan_family(height, true); }

FamilyReport enumerate_family_reference(int height) { return scan_family(height, false); }

} // namespace nk
