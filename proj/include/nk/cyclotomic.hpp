#ifndef NK_CYCLOTOMIC_HPP
#define NK_CYCLOTOMIC_HPP

#include <map>

#include "nk/matrix.hpp"
#include "nk/polynomial.hpp"

namespace nk {

unsigned euler_phi(unsigned n);

// Phi_n, computed by dividing t^n - 1 by the proper-divisor cyclotomics.
const IntPoly& cyclotomic(unsigned n);

// p = cyclotomicPart * rest, where cyclotomicPart is the maximal factor
// that is a product of cyclotomics (recorded with multiplicities) and rest
// has no root of unity as a root. Requires monic p.
struct CyclotomicSplit {
    IntPoly cyclotomicPart;
    IntPoly rest;
    std::map<unsigned, int> multiplicities; // n -> exponent of Phi_n
};

CyclotomicSplit cyclotomic_split(const IntPoly& p);

// True iff every eigenvalue of the integer matrix is a root of unity,
// i.e. the characteristic polynomial is a product of cyclotomics.
bool is_quasi_unipotent(const IMat& m);

} // namespace nk

#endif
