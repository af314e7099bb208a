#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <vector>

#include "nk/certify.hpp"
#include "nk/cyclotomic.hpp"
#include "nk/errors.hpp"
#include "nk/kummer.hpp"
#include "nk/matrix.hpp"
#include "nk/polynomial.hpp"
#include "nk/sturm.hpp"

using namespace nk;

namespace {

GaussianMatrix2 gm(long long are, long long aim, long long bre, long long bim,
                   long long cre, long long cim, long long dre, long long dim) {
    return GaussianMatrix2(GaussianInt(Int(are), Int(aim)), GaussianInt(Int(bre), Int(bim)),
                           GaussianInt(Int(cre), Int(cim)), GaussianInt(Int(dre), Int(dim)));
}

GaussianMatrix2 random_sl2(std::mt19937& rng, int steps) {
    GaussianInt a(1, 0), b(0, 0), c(0, 0), d(1, 0);
    std::uniform_int_distribution<int> part(-1, 1);
    for (int s = 0; s < steps; ++s) {
        GaussianInt g(part(rng), part(rng));
        if (s % 2 == 0) {
            b = a * g + b;
            d = c * g + d;
        } else {
            a = a + b * g;
            c = c + d * g;
        }
    }
    return GaussianMatrix2(a, b, c, d);
}

// Independent reconstruction: product of the claimed cyclotomic powers
// times the claimed rest.
IntPoly rebuild(const std::map<unsigned, int>& mult, const IntPoly& rest) {
    IntPoly acc({1});
    for (const auto& [n, e] : mult) acc = acc * poly_pow(cyclotomic(n), e);
    return acc * rest;
}

// Cycle polynomial of a permutation: product of t^len - 1 over cycles.
IntPoly cycle_poly(const std::array<int, 16>& perm) {
    std::array<bool, 16> seen{};
    IntPoly acc({1});
    for (int s = 0; s < 16; ++s) {
        if (seen[s]) continue;
        int len = 0, j = s;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        acc = acc * (IntPoly::x_power(static_cast<std::size_t>(len)) + IntPoly({-1}));
    }
    return acc;
}

std::array<long long, 8> negated(const std::array<long long, 8>& k) {
    std::array<long long, 8> out{};
    for (int i = 0; i < 8; ++i) out[i] = -k[i];
    return out;
}

} // namespace

TEST_CASE("certificate: frozen factorization data for both running examples") {
    const NonkahlerCertificate c1 = certify_nonkahler(gm(1, 0, 1, 0, 1, 0, 2, 0));
    CHECK(c1.traceNormSq == Int(9));
    CHECK(c1.charPoly.degree() == 22);
    CHECK(c1.charPoly.is_monic());
    CHECK(c1.cyclotomicMultiplicities == std::map<unsigned, int>{{1, 10}, {3, 5}});
    CHECK(c1.rest == IntPoly({1, -7, 1}));
    CHECK(rebuild(c1.cyclotomicMultiplicities, c1.rest) == c1.charPoly);
    CHECK(c1.witness.lo > Rat(6));
    CHECK(c1.witness.hi < Rat(7));
    CHECK(c1.witness.width() <= Rat(1, 1000));
    CHECK(c1.refineWidth == Rat(1, 1000));

    const NonkahlerCertificate c2 = certify_nonkahler(gm(1, 1, 0, 1, 1, 0, 1, 0));
    CHECK(c2.traceNormSq == Int(5));
    CHECK(c2.cyclotomicMultiplicities == std::map<unsigned, int>{{1, 6}, {2, 2}, {3, 3}, {6, 2}});
    CHECK(c2.rest == IntPoly({1, -5, 4, -5, 1}));
    CHECK(rebuild(c2.cyclotomicMultiplicities, c2.rest) == c2.charPoly);
    CHECK(c2.witness.lo > Rat(4));
    CHECK(c2.witness.hi < Rat(5));

    // Tighter refinement on request.
    const NonkahlerCertificate fine = certify_nonkahler(gm(1, 0, 1, 0, 1, 0, 2, 0), Rat(1, 1000000));
    CHECK(fine.witness.width() <= Rat(1, 1000000));
    CHECK(fine.rest == c1.rest);

    CHECK_THROWS_AS((void)certify_nonkahler(GaussianMatrix2::identity()), gate_error);
    try {
        (void)certify_nonkahler(gm(1, 0, 0, 0, 1, 0, 1, 0));
        CHECK(false);
    } catch (const gate_error& e) {
        CHECK(std::string(e.what()).find("|tr(A)| > 2") != std::string::npos);
    }
}

TEST_CASE("certificate revalidation rejects any tampered field") {
    const NonkahlerCertificate good = certify_nonkahler(gm(1, 0, 1, 0, 1, 0, 2, 0));
    CHECK(revalidate_certificate(good));
    CHECK(revalidate_certificate(certify_nonkahler(gm(1, 1, 0, 1, 1, 0, 1, 0))));

    NonkahlerCertificate t1 = good;
    t1.traceNormSq = Int(7);
    CHECK_FALSE(revalidate_certificate(t1));

    NonkahlerCertificate t2 = good;
    t2.rest = t2.rest * IntPoly({-1, 1});
    CHECK_FALSE(revalidate_certificate(t2));

    NonkahlerCertificate t3 = good;
    t3.charPoly = t3.charPoly + IntPoly({1});
    CHECK_FALSE(revalidate_certificate(t3));

    NonkahlerCertificate t4 = good;
    t4.cyclotomicMultiplicities[1] += 1;
    CHECK_FALSE(revalidate_certificate(t4));

    NonkahlerCertificate t5 = good;
    t5.witness.lo = Rat(2);
    t5.witness.hi = Rat(2) + t5.witness.width();
    CHECK_FALSE(revalidate_certificate(t5));

    NonkahlerCertificate t6 = good;
    t6.witness.hi = t6.witness.lo + Rat(1); // wider than the claimed width
    CHECK_FALSE(revalidate_certificate(t6));

    // A certificate whose matrix fails the gate can never revalidate.
    NonkahlerCertificate t7 = good;
    t7.matrix = gm(1, 0, 0, 0, 1, 0, 1, 0);
    CHECK_FALSE(revalidate_certificate(t7));
}

TEST_CASE("homotopy comparison: radii order decides, equal radii stay open") {
    const GaussianMatrix2 a1 = gm(1, 0, 1, 0, 1, 0, 2, 0); // largest root ~6.854
    const GaussianMatrix2 a2 = gm(1, 0, 2, 0, 1, 0, 3, 0); // largest root ~13.928
    const GaussianMatrix2 a3 = gm(1, 1, 0, 1, 1, 0, 1, 0); // largest root ~4.331

    const HomotopyComparison h12 = compare_homotopy_types(a1, a2);
    CHECK(h12.verdict == ComparisonVerdict::Distinct);
    CHECK(h12.radii.order == RootOrder::Less);
    CHECK(h12.restLeft == IntPoly({1, -7, 1}));
    CHECK(h12.restRight == IntPoly({1, -14, 1}));
    CHECK_FALSE(h12.explanation.empty());

    const HomotopyComparison h21 = compare_homotopy_types(a2, a1);
    CHECK(h21.verdict == ComparisonVerdict::Distinct);
    CHECK(h21.radii.order == RootOrder::Greater);

    const HomotopyComparison h13 = compare_homotopy_types(a1, a3);
    CHECK(h13.verdict == ComparisonVerdict::Distinct);
    CHECK(h13.radii.order == RootOrder::Greater);

    const HomotopyComparison hNeg = compare_homotopy_types(a1, -a1);
    CHECK(hNeg.verdict == ComparisonVerdict::InconclusiveEqualRadii);
    CHECK(hNeg.radii.order == RootOrder::Equal);
    CHECK(hNeg.restLeft == hNeg.restRight);

    CHECK(compare_homotopy_types(a1, a1).verdict == ComparisonVerdict::InconclusiveEqualRadii);

    CHECK_THROWS_AS((void)compare_homotopy_types(GaussianMatrix2::identity(), a1), gate_error);
    CHECK_THROWS_AS((void)compare_homotopy_types(a1, gm(1, 0, 0, 0, 1, 0, 1, 0)), gate_error);
}

TEST_CASE("jump loci: degree-24 spectrum with reciprocal real pair") {
    const JumpLociReport j0 = jump_loci(GaussianMatrix2::identity());
    CHECK(j0.fullCharPoly == poly_pow(IntPoly({-1, 1}), 24));
    CHECK(j0.cyclotomicMultiplicities == std::map<unsigned, int>{{1, 24}});
    CHECK(j0.rest == IntPoly({1}));
    CHECK(j0.restSelfReciprocal);
    CHECK(j0.realRoots.empty());

    // Parabolic: not gated, still a valid report with empty rest.
    const JumpLociReport jp = jump_loci(gm(1, 0, 0, 0, 1, 0, 1, 0));
    CHECK(jp.rest == IntPoly({1}));
    CHECK(jp.realRoots.empty());
    CHECK(jp.fullCharPoly.degree() == 24);

    const NonkahlerCertificate cert = certify_nonkahler(gm(1, 0, 1, 0, 1, 0, 2, 0));
    const JumpLociReport j1 = jump_loci(gm(1, 0, 1, 0, 1, 0, 2, 0));
    CHECK(j1.fullCharPoly == poly_pow(IntPoly({-1, 1}), 2) * cert.charPoly);
    CHECK(j1.cyclotomicMultiplicities == std::map<unsigned, int>{{1, 12}, {3, 5}});
    CHECK(j1.rest == cert.rest);
    CHECK(j1.restSelfReciprocal);
    REQUIRE(j1.realRoots.size() == 2);
    CHECK(j1.realRoots[0].lo >= Rat(0));
    CHECK(j1.realRoots[0].hi < Rat(1));
    CHECK(j1.realRoots[1].lo > Rat(1));
    CHECK(j1.realRoots[0].width() <= Rat(1, 1000));
    CHECK(j1.realRoots[1].width() <= Rat(1, 1000));

    // The upper real root is the certificate's witness root: the two
    // intervals overlap and the overlap isolates one root of rest.
    {
        const Rat lo = std::max(j1.realRoots[1].lo, cert.witness.lo);
        const Rat hi = std::min(j1.realRoots[1].hi, cert.witness.hi);
        CHECK(lo < hi);
        CHECK(SturmChain(cert.rest).count(lo, hi) == 1);
    }

    const JumpLociReport j2 = jump_loci(gm(1, 1, 0, 1, 1, 0, 1, 0));
    CHECK(j2.cyclotomicMultiplicities == std::map<unsigned, int>{{1, 8}, {2, 2}, {3, 3}, {6, 2}});
    CHECK(j2.rest == IntPoly({1, -5, 4, -5, 1}));
    REQUIRE(j2.realRoots.size() == 2);
    CHECK(j2.realRoots[1].lo > Rat(4));
    CHECK(j2.realRoots[1].hi < Rat(5));

    std::mt19937 rng(7301);
    int gated = 0;
    while (gated < 10) {
        const GaussianMatrix2 a = random_sl2(rng, 7);
        if (a.trace_norm_sq() <= Int(4)) continue;
        ++gated;
        const JumpLociReport j = jump_loci(a);
        CHECK(j.restSelfReciprocal);
        CHECK(j.fullCharPoly == poly_pow(IntPoly({-1, 1}), 2) * char_poly(kummer_action(a).matrix));
        REQUIRE(j.realRoots.size() == 2);
        CHECK(j.realRoots[0].hi < Rat(1));
        CHECK(j.realRoots[0].lo > Rat(0));
        CHECK(j.realRoots[1].lo > Rat(1));
        CHECK(rebuild(j.cyclotomicMultiplicities, j.rest) == j.fullCharPoly);
    }
}

TEST_CASE("blockwise characteristic polynomial equals the full one") {
    std::mt19937 rng(7302);
    for (int trial = 0; trial < 10; ++trial) {
        const GaussianMatrix2 a = random_sl2(rng, 6 + trial % 4);
        const KummerAction act = kummer_action(a);
        CHECK(char_poly(act.matrix) == cycle_poly(act.pointPermutation) * char_poly(act.extBlock));
    }
}

TEST_CASE("family scan at height 1 matches a brute recount") {
    const FamilyReport rep = enumerate_family(1);
    CHECK(rep.height == 1);
    CHECK(rep.scanned == 6561); // 3^8

    // Independent recount with plain integer arithmetic.
    unsigned long long unimodular = 0, gated = 0, kept = 0;
    for (long long i = 0; i < 6561; ++i) {
        long long digits[8];
        long long x = i;
        for (int d = 0; d < 8; ++d) {
            digits[d] = x % 3 - 1;
            x /= 3;
        }
        const long long are = digits[0], aim = digits[1], bre = digits[2], bim = digits[3];
        const long long cre = digits[4], cim = digits[5], dre = digits[6], dim = digits[7];
        const long long detRe = are * dre - aim * dim - (bre * cre - bim * cim);
        const long long detIm = are * dim + aim * dre - (bre * cim + bim * cre);
        if (detRe != 1 || detIm != 0) continue;
        ++unimodular;
        const long long trRe = are + dre, trIm = aim + dim;
        if (trRe * trRe + trIm * trIm <= 4) continue;
        ++gated;
        const std::array<long long, 8> key{are, aim, bre, bim, cre, cim, dre, dim};
        if (key < negated(key)) ++kept;
    }
    CHECK(rep.unimodular == unimodular);
    CHECK(rep.gated == gated);
    CHECK(rep.entries.size() == kept);
    CHECK(rep.gated == 2 * rep.entries.size());

    std::set<std::array<long long, 8>> keys;
    for (std::size_t e = 0; e < rep.entries.size(); ++e) {
        const FamilyEntry& fe = rep.entries[e];
        if (e > 0) CHECK(rep.entries[e - 1].key < fe.key);
        keys.insert(fe.key);
        CHECK(fe.matrix.trace_norm_sq() == fe.traceNormSq);
        CHECK(fe.traceNormSq > Int(4));
        CHECK(fe.matrix.at(0, 0).re == Int(fe.key[0]));
        CHECK(fe.matrix.at(0, 0).im == Int(fe.key[1]));
        CHECK(fe.matrix.at(1, 1).re == Int(fe.key[6]));
        CHECK(fe.matrix.at(1, 1).im == Int(fe.key[7]));
        CHECK(fe.rest.is_monic());
        CHECK((fe.rest.degree() == 2 || fe.rest.degree() == 4));
        CHECK(cyclotomic_split(fe.rest).rest == fe.rest);
    }
    for (const auto& k : keys) CHECK(keys.count(negated(k)) == 0);

    // Groups partition the entries and share their rest factor.
    std::set<std::size_t> seen;
    for (std::size_t g = 0; g < rep.groups.size(); ++g) {
        if (g > 0) CHECK(rep.groups[g - 1].rest < rep.groups[g].rest);
        CHECK_FALSE(rep.groups[g].members.empty());
        for (std::size_t idx : rep.groups[g].members) {
            CHECK(rep.entries[idx].rest == rep.groups[g].rest);
            seen.insert(idx);
        }
    }
    CHECK(seen.size() == rep.entries.size());

    CHECK_THROWS_AS((void)enumerate_family(-1), domain_error);
    CHECK(enumerate_family(0).entries.empty());
}

TEST_CASE("family scan: reference and fast variants agree and are deterministic") {
    const FamilyReport fast1 = enumerate_family(1);
    const FamilyReport fast2 = enumerate_family(1);
    const FamilyReport ref = enumerate_family_reference(1);

    for (const FamilyReport* other : {&fast2, &ref}) {
        CHECK(fast1.scanned == other->scanned);
        CHECK(fast1.unimodular == other->unimodular);
        CHECK(fast1.gated == other->gated);
        REQUIRE(fast1.entries.size() == other->entries.size());
        for (std::size_t e = 0; e < fast1.entries.size(); ++e) {
            CHECK(fast1.entries[e].key == other->entries[e].key);
            CHECK(fast1.entries[e].traceNormSq == other->entries[e].traceNormSq);
            CHECK(fast1.entries[e].rest == other->entries[e].rest);
        }
        REQUIRE(fast1.groups.size() == other->groups.size());
        for (std::size_t g = 0; g < fast1.groups.size(); ++g) {
            CHECK(fast1.groups[g].rest == other->groups[g].rest);
            CHECK(fast1.groups[g].members == other->groups[g].members);
        }
    }
}

TEST_CASE("family scan at height 2 holds the sign representative of a known matrix") {
    const FamilyReport rep = enumerate_family(2);
    CHECK(rep.scanned == 390625); // 5^8

    const std::array<long long, 8> keptKey{-1, 0, -1, 0, -1, 0, -2, 0};
    const std::array<long long, 8> droppedKey{1, 0, 1, 0, 1, 0, 2, 0};
    bool found = false;
    for (const FamilyEntry& fe : rep.entries) {
        CHECK(fe.key != droppedKey);
        if (fe.key == keptKey) {
            found = true;
            CHECK(fe.rest == IntPoly({1, -7, 1}));
            CHECK(fe.traceNormSq == Int(9));
        }
    }
    CHECK(found);
}
