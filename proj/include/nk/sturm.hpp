#ifndef NK_STURM_HPP
#define NK_STURM_HPP

#include <vector>

#include "nk/polynomial.hpp"

namespace nk {

// Sturm chain of the squarefree part of a polynomial. Sign-variation
// differences count distinct real roots; multiplicities never enter.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);

    const IntPoly& squarefree() const { return chain_.front(); }
    // Sign variations of the chain at x; x must not be a root.
    int variations_at(const Rat& x) const;
    // Number of distinct real roots in the open interval (lo, hi);
    // endpoints must not be roots of the squarefree part.
    int count(const Rat& lo, const Rat& hi) const;
    int count_all_real() const;

private:
    std::vector<IntPoly> chain_;
};

// Open rational interval certified to contain exactly one distinct real
// root of poly. signChangesLo/Hi are the chain's sign-variation counts at
// the endpoints (their difference is 1).
struct IsolatingInterval {
    Rat lo;
    Rat hi;
    IntPoly poly;
    int signChangesLo = 0;
    int signChangesHi = 0;

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo < x && x < hi; }
};

// All real roots, one interval each, in ascending order. Intervals are
// pairwise disjoint and have non-root rational endpoints.
std::vector<IsolatingInterval> sturm_isolate_real_roots(const IntPoly& p);

// Bisect until the interval is narrower than width (result still isolates
// the same root).
IsolatingInterval refine_interval(const IsolatingInterval& iv, const Rat& width);

enum class RootOrder { Less, Equal, Greater };

// Comparison transcript: the isolating intervals used for each largest
// root, the common factor when the roots coincide, and the verdict.
struct RootComparison {
    RootOrder order;
    IsolatingInterval left;
    IsolatingInterval right;
    IntPoly commonFactor; // nonzero iff order == Equal
};

// Exact order of the largest real roots of p and q. Equality is certified
// through gcd(p, q); strict order through disjoint refined intervals.
// Both polynomials must have a real root > 0.
RootComparison compare_largest_real_roots(const IntPoly& p, const IntPoly& q);

} // namespace nk

#endif
