#include "nk/report.hpp"

#include <sstream>

#include "nk/errors.hpp"
#include "nk/matrix.hpp"
#include "nk/parse.hpp"

namespace nk {

namespace {

using nlohmann::ordered_json;

ordered_json matrix_cells(const GaussianMatrix2& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < 2; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < 2; ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json gate_object() {
    ordered_json g;
    g["requirement"] = "|tr(A)| > 2";
    g["satisfied"] = true;
    return g;
}

ordered_json multiplicities_object(const std::map<unsigned, int>& mult) {
    ordered_json m = ordered_json::object();
    for (const auto& [n, e] : mult) m[std::to_string(n)] = e;
    return m;
}

ordered_json interval_object(const IsolatingInterval& iv) {
    ordered_json j;
    j["lo"] = rat_to_string(iv.lo);
    j["hi"] = rat_to_string(iv.hi);
    j["width"] = rat_to_string(iv.width());
    return j;
}

std::string poly_text(const IntPoly& p) {
    std::ostringstream out;
    const auto parts = poly_strings(p);
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " " : "") << parts[i];
    return out.str();
}

std::string multiplicities_text(const std::map<unsigned, int>& mult) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [n, e] : mult) {
        out << (first ? "" : " ") << "Phi_" << n << "^" << e;
        first = false;
    }
    return out.str();
}

template <typename Seq>
std::string join_numbers(const Seq& seq) {
    std::ostringstream out;
    bool first = true;
    for (const auto& v : seq) {
        out << (first ? "" : " ") << v;
        first = false;
    }
    return out.str();
}

void append_notes(std::ostringstream& out) {
    for (const std::string& note : normalization_notes()) out << "note: " << note << "\n";
}

} // namespace

AnalysisReport analyze_matrix(const GaussianMatrix2& a) {
    const MabRing ring = build_mab_ring(a); // trace gate lives here
    const KummerAction act = kummer_action(a);
    const IntPoly cp = char_poly(act.matrix);
    const CyclotomicSplit split = cyclotomic_split(cp);
    const SymplecticClass w = symplectic_class(ring);
    return AnalysisReport{a,
                          a.trace_norm_sq(),
                          wang_cohomology(act),
                          ring.m(),
                          ring.betti(),
                          cp,
                          split.multiplicities,
                          split.rest,
                          w.d,
                          hard_lefschetz(ring, w),
                          formality_witness_from_h2(to_rational(act.matrix))};
}

CertifyReport certify_matrix(const GaussianMatrix2& a, const Rat& refineWidth) {
    NonkahlerCertificate cert = certify_nonkahler(a, refineWidth);
    const bool ok = revalidate_certificate(cert);
    if (!ok) throw internal_error("freshly issued certificate failed revalidation");
    JumpLociReport loci = jump_loci(a, refineWidth);
    return CertifyReport{std::move(cert), ok, std::move(loci)};
}

std::string rat_to_string(const Rat& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::vector<std::string> poly_strings(const IntPoly& p) {
    if (p.degree() < 0) return {"0"};
    std::vector<std::string> out;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k)
        out.push_back(p.coeff(k).str());
    return out;
}

std::vector<std::string> normalization_notes() {
    return {
        "matrix entries are Gaussian integers rendered like 1+1i, 1i, -1i; rows are "
        "separated by ';' and entries by ','",
        "polynomials are listed by ascending power with exact integer coefficients",
        "degree-2 classes are ordered as the 16 exceptional classes followed by the six "
        "form classes e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4",
        "the pairing is -2 on each exceptional class and the plain wedge pairing on form "
        "classes, so the area class squares to 2 kappa",
        "interval endpoints are exact rationals p/q; witness intervals are refined below "
        "the requested width (default 1/1000, NK_REFINE_WIDTH or --width override)"};
}

nlohmann::ordered_json to_json(const AnalysisReport& rep) {
    ordered_json j;
    j["command"] = "analyze";
    j["matrix"] = matrix_cells(rep.matrix);
    j["traceNormSq"] = rep.traceNormSq.str();
    j["gate"] = gate_object();
    j["fiberBetti"] = rep.wang.bettiN;
    j["betti"] = rep.betti;
    j["fixedSubspaceDim"] = rep.fixedSubspaceDim;
    j["charPoly"] = poly_strings(rep.charPoly);
    j["cyclotomicMultiplicities"] = multiplicities_object(rep.cyclotomicMultiplicities);
    j["rest"] = poly_strings(rep.rest);
    j["d"] = rat_to_string(rep.d);
    ordered_json maps = ordered_json::array();
    for (const LefschetzMap& m : rep.lefschetz.maps) {
        ordered_json mj;
        mj["j"] = m.j;
        mj["domainDim"] = m.domainDim;
        mj["codomainDim"] = m.codomainDim;
        mj["rank"] = m.rank;
        mj["isomorphism"] = m.isomorphism;
        maps.push_back(mj);
    }
    ordered_json lef;
    lef["maps"] = maps;
    lef["allIsomorphisms"] = rep.lefschetz.allIsomorphisms;
    j["lefschetz"] = lef;
    ordered_json form;
    form["b1Equals1"] = rep.formality.b1Equals1;
    form["cupIso"] = rep.formality.cupIso;
    form["semisimpleAt1"] = rep.formality.semisimpleAt1;
    form["holds"] = rep.formality.holds;
    form["justification"] = rep.formality.justification;
    j["formality"] = form;
    j["normalizationNotes"] = normalization_notes();
    return j;
}

nlohmann::ordered_json to_json(const CertifyReport& rep) {
    ordered_json j;
    j["command"] = "certify";
    j["matrix"] = matrix_cells(rep.certificate.matrix);
    j["traceNormSq"] = rep.certificate.traceNormSq.str();
    j["gate"] = gate_object();
    ordered_json cert;
    cert["charPoly"] = poly_strings(rep.certificate.charPoly);
    cert["cyclotomicMultiplicities"] =
        multiplicities_object(rep.certificate.cyclotomicMultiplicities);
    cert["rest"] = poly_strings(rep.certificate.rest);
    cert["witness"] = interval_object(rep.certificate.witness);
    cert["refineWidth"] = rat_to_string(rep.certificate.refineWidth);
    cert["revalidated"] = rep.revalidated;
    j["certificate"] = cert;
    ordered_json loci;
    loci["fullCharPoly"] = poly_strings(rep.jumpLoci.fullCharPoly);
    loci["cyclotomicMultiplicities"] =
        multiplicities_object(rep.jumpLoci.cyclotomicMultiplicities);
    loci["rest"] = poly_strings(rep.jumpLoci.rest);
    loci["restSelfReciprocal"] = rep.jumpLoci.restSelfReciprocal;
    ordered_json roots = ordered_json::array();
    for (const IsolatingInterval& iv : rep.jumpLoci.realRoots) roots.push_back(interval_object(iv));
    loci["realRoots"] = roots;
    j["jumpLoci"] = loci;
    j["nonkahler"] = rep.revalidated;
    j["normalizationNotes"] = normalization_notes();
    return j;
}

nlohmann::ordered_json to_json(const HomotopyComparison& cmp, const GaussianMatrix2& left,
                               const GaussianMatrix2& right) {
    ordered_json j;
    j["command"] = "compare";
    j["left"] = render_matrix(left);
    j["right"] = render_matrix(right);
    j["restLeft"] = poly_strings(cmp.restLeft);
    j["restRight"] = poly_strings(cmp.restRight);
    j["radiiOrder"] = cmp.radii.order == RootOrder::Less      ? "Less"
                      : cmp.radii.order == RootOrder::Greater ? "Greater"
                                                              : "Equal";
    j["largestRootLeft"] = interval_object(cmp.radii.left);
    j["largestRootRight"] = interval_object(cmp.radii.right);
    j["verdict"] =
        cmp.verdict == ComparisonVerdict::Distinct ? "Distinct" : "InconclusiveEqualRadii";
    j["explanation"] = cmp.explanation;
    return j;
}

nlohmann::ordered_json to_json(const FamilyReport& rep) {
    ordered_json j;
    j["command"] = "enumerate";
    j["height"] = rep.height;
    j["scanned"] = rep.scanned;
    j["unimodular"] = rep.unimodular;
    j["gated"] = rep.gated;
    ordered_json entries = ordered_json::array();
    for (const FamilyEntry& e : rep.entries) {
        ordered_json ej;
        ej["matrix"] = render_matrix(e.matrix);
        ej["key"] = e.key;
        ej["traceNormSq"] = e.traceNormSq.str();
        ej["rest"] = poly_strings(e.rest);
        entries.push_back(ej);
    }
    j["entries"] = entries;
    ordered_json groups = ordered_json::array();
    for (const FamilyGroup& g : rep.groups) {
        ordered_json gj;
        gj["rest"] = poly_strings(g.rest);
        gj["members"] = g.members;
        groups.push_back(gj);
    }
    j["groups"] = groups;
    return j;
}

std::string to_text(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "command: analyze\n";
    out << "matrix: " << render_matrix(rep.matrix) << "\n";
    out << "traceNormSq: " << rep.traceNormSq.str() << "\n";
    out << "gate: |tr(A)| > 2 satisfied\n";
    out << "fiberBetti: " << join_numbers(rep.wang.bettiN) << "\n";
    out << "betti: " << join_numbers(rep.betti) << "\n";
    out << "fixedSubspaceDim: " << rep.fixedSubspaceDim << "\n";
    out << "charPoly: " << poly_text(rep.charPoly) << "\n";
    out << "cyclotomic: " << multiplicities_text(rep.cyclotomicMultiplicities) << "\n";
    out << "rest: " << poly_text(rep.rest) << "\n";
    out << "d: " << rat_to_string(rep.d) << "\n";
    out << "lefschetz:";
    for (const LefschetzMap& m : rep.lefschetz.maps)
        out << " j=" << m.j << " rank " << m.rank << "/" << m.domainDim << ",";
    out << " all isomorphisms: " << (rep.lefschetz.allIsomorphisms ? "yes" : "no") << "\n";
    out << "formality: " << (rep.formality.holds ? "holds" : "fails") << "\n";
    out << "justification: " << rep.formality.justification << "\n";
    append_notes(out);
    return out.str();
}

std::string to_text(const CertifyReport& rep) {
    std::ostringstream out;
    out << "command: certify\n";
    out << "matrix: " << render_matrix(rep.certificate.matrix) << "\n";
    out << "traceNormSq: " << rep.certificate.traceNormSq.str() << "\n";
    out << "gate: |tr(A)| > 2 satisfied\n";
    out << "charPoly: " << poly_text(rep.certificate.charPoly) << "\n";
    out << "cyclotomic: " << multiplicities_text(rep.certificate.cyclotomicMultiplicities)
        << "\n";
    out << "rest: " << poly_text(rep.certificate.rest) << "\n";
    out << "witness: root of rest in (" << rat_to_string(rep.certificate.witness.lo) << ", "
        << rat_to_string(rep.certificate.witness.hi) << "), width "
        << rat_to_string(rep.certificate.witness.width()) << "\n";
    out << "refineWidth: " << rat_to_string(rep.certificate.refineWidth) << "\n";
    out << "revalidated: " << (rep.revalidated ? "yes" : "no") << "\n";
    out << "nonkahler: " << (rep.revalidated ? "certified" : "not certified") << "\n";
    out << "jumpLoci rest: " << poly_text(rep.jumpLoci.rest)
        << ", self-reciprocal: " << (rep.jumpLoci.restSelfReciprocal ? "yes" : "no") << "\n";
    out << "jumpLoci realRoots:";
    for (const IsolatingInterval& iv : rep.jumpLoci.realRoots)
        out << " (" << rat_to_string(iv.lo) << ", " << rat_to_string(iv.hi) << ")";
    out << "\n";
    append_notes(out);
    return out.str();
}

std::string to_text(const HomotopyComparison& cmp, const GaussianMatrix2& left,
                    const GaussianMatrix2& right) {
    std::ostringstream out;
    out << "command: compare\n";
    out << "left: " << render_matrix(left) << "\n";
    out << "right: " << render_matrix(right) << "\n";
    out << "restLeft: " << poly_text(cmp.restLeft) << "\n";
    out << "restRight: " << poly_text(cmp.restRight) << "\n";
    out << "radiiOrder: "
        << (cmp.radii.order == RootOrder::Less      ? "Less"
            : cmp.radii.order == RootOrder::Greater ? "Greater"
                                                    : "Equal")
        << "\n";
    out << "verdict: "
        << (cmp.verdict == ComparisonVerdict::Distinct ? "Distinct" : "InconclusiveEqualRadii")
        << "\n";
    out << "explanation: " << cmp.explanation << "\n";
    return out.str();
}

std::string to_text(const FamilyReport& rep) {
    std::ostringstream out;
    out << "command: enumerate\n";
    out << "height: " << rep.height << "\n";
    out << "scanned: " << rep.scanned << "\n";
    out << "unimodular: " << rep.unimodular << "\n";
    out << "gated: " << rep.gated << "\n";
    out << "entries: " << rep.entries.size() << "\n";
    out << "groups: " << rep.groups.size() << "\n";
    for (const FamilyGroup& g : rep.groups)
        out << "group [" << poly_text(g.rest) << "]: " << g.members.size() << " members\n";
    return out.str();
}

} // namespace nk
