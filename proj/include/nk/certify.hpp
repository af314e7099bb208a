#ifndef NK_CERTIFY_HPP
#define NK_CERTIFY_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nk/cyclotomic.hpp"
#include "nk/kummer.hpp"
#include "nk/polynomial.hpp"
#include "nk/sturm.hpp"

namespace nk {

// Everything needed to re-check nonkählerness offline: the degree-2
// characteristic polynomial, its factorization into root-of-unity part
// and non-cyclotomic rest, and a certified interval isolating a real
// eigenvalue strictly above 1.
struct NonkahlerCertificate {
    GaussianMatrix2 matrix;
    Int traceNormSq;
    IntPoly charPoly;                           // degree 22, monic
    std::map<unsigned, int> cyclotomicMultiplicities;
    IntPoly rest;                               // monic, no cyclotomic factor
    IsolatingInterval witness;                  // isolates a root of rest, lo > 1
    Rat refineWidth;
};

// Gate: |tr(a)|^2 > 4. The witness interval is refined below refineWidth.
NonkahlerCertificate certify_nonkahler(const GaussianMatrix2& a,
                                       const Rat& refineWidth = Rat(1, 1000));

// Recomputes every claim in the certificate from scratch; any mismatch
// (including a tampered interval or factor list) returns false.
bool revalidate_certificate(const NonkahlerCertificate& cert);

enum class ComparisonVerdict { Distinct, InconclusiveEqualRadii };

// Orders the largest real degree-2 eigenvalues of two matrices. Different
// radii certify different homotopy types; equal radii decide nothing
// (a and -a induce identical actions).
struct HomotopyComparison {
    ComparisonVerdict verdict;
    IntPoly restLeft;
    IntPoly restRight;
    RootComparison radii;
    std::string explanation;
};

HomotopyComparison compare_homotopy_types(const GaussianMatrix2& a, const GaussianMatrix2& b);

// Character variety data for the even cohomology of the fiber: the full
// degree-24 characteristic polynomial, its cyclotomic multiplicities
// (torsion translates of the trivial character), and the non-cyclotomic
// rest with isolating intervals for its real roots. Not gated: a matrix
// without a hyperbolic part reports an empty rest.
struct JumpLociReport {
    IntPoly fullCharPoly;                       // degree 24
    std::map<unsigned, int> cyclotomicMultiplicities;
    IntPoly rest;
    bool restSelfReciprocal;
    std::vector<IsolatingInterval> realRoots;   // ascending, refined
};

JumpLociReport jump_loci(const GaussianMatrix2& a, const Rat& refineWidth = Rat(1, 1000));

// One matrix surviving the determinant and trace gates, keyed by the
// lexicographic tuple of coordinate parts used for ordering and for the
// sign dedup (of a and -a, the smaller key is kept).
struct FamilyEntry {
    GaussianMatrix2 matrix;
    std::array<long long, 8> key;
    Int traceNormSq;
    IntPoly rest;
};

struct FamilyGroup {
    IntPoly rest;
    std::vector<std::size_t> members; // indices into entries
};

struct FamilyReport {
    int height = 0;
    unsigned long long scanned = 0;     // all coordinate tuples visited
    unsigned long long unimodular = 0;  // determinant 1
    unsigned long long gated = 0;       // and |tr|^2 > 4
    std::vector<FamilyEntry> entries;   // deduped, ascending by key
    std::vector<FamilyGroup> groups;    // ascending by rest polynomial
};

// Scan of all matrices with coordinate parts in [-height, height]. The
// fast variant derives each characteristic polynomial blockwise (cycle
// polynomial times the 6x6 block) and runs the scan in parallel when
// OpenMP is available; the reference variant works on the full 22x22
// matrix serially. Both produce identical reports.
FamilyReport enumerate_family(int height);
FamilyReport enumerate_family_reference(int height);

} // namespace nk

#endif
