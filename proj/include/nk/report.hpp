#ifndef NK_REPORT_HPP
#define NK_REPORT_HPP

#include <json.hpp>

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "nk/certify.hpp"
#include "nk/kummer.hpp"
#include "nk/mab.hpp"

namespace nk {

// Full topological profile of one gated matrix: fiber and total Betti
// numbers, the degree-2 spectrum, the symplectic constant, the Lefschetz
// ranks, and the formality witness.
struct AnalysisReport {
    GaussianMatrix2 matrix;
    Int traceNormSq;
    WangProfile wang;
    std::size_t fixedSubspaceDim;
    std::array<std::size_t, 7> betti;
    IntPoly charPoly;
    std::map<unsigned, int> cyclotomicMultiplicities;
    IntPoly rest;
    Rat d;
    LefschetzReport lefschetz;
    FormalityWitness formality;
};

AnalysisReport analyze_matrix(const GaussianMatrix2& a);

// Certificate plus character-variety data, revalidated before reporting.
struct CertifyReport {
    NonkahlerCertificate certificate;
    bool revalidated;
    JumpLociReport jumpLoci;
};

CertifyReport certify_matrix(const GaussianMatrix2& a, const Rat& refineWidth);

// Exact rational as "p" or "p/q".
std::string rat_to_string(const Rat& r);

// Coefficients by ascending power, each exact.
std::vector<std::string> poly_strings(const IntPoly& p);

// Conventions a reader needs to interpret the exact values.
std::vector<std::string> normalization_notes();

nlohmann::ordered_json to_json(const AnalysisReport& rep);
nlohmann::ordered_json to_json(const CertifyReport& rep);
nlohmann::ordered_json to_json(const HomotopyComparison& cmp, const GaussianMatrix2& left,
                               const GaussianMatrix2& right);
nlohmann::ordered_json to_json(const FamilyReport& rep);

std::string to_text(const AnalysisReport& rep);
std::string to_text(const CertifyReport& rep);
std::string to_text(const HomotopyComparison& cmp, const GaussianMatrix2& left,
                    const GaussianMatrix2& right);
std::string to_text(const FamilyReport& rep);

} // namespace nk

#endif
