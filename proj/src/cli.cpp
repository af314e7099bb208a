#include "nk/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <string>
#include <vector>

#include "nk/certify.hpp"
#include "nk/errors.hpp"
#include "nk/parse.hpp"
#include "nk/report.hpp"

namespace nk {

namespace {

// --width beats NK_REFINE_WIDTH beats the 1/1000 default.
Rat resolve_width(const std::string& flagValue) {
    std::string source = flagValue;
    std::string origin = "--width";
    if (source.empty()) {
        const char* env = std::getenv("NK_REFINE_WIDTH");
        if (env == nullptr || *env == '\0') return Rat(1, 1000);
        source = env;
        origin = "NK_REFINE_WIDTH";
    }
    Rat width;
    try {
        width = parse_rational(source);
    } catch (const parse_error&) {
        throw domain_error(origin + " is not a rational number: " + source);
    }
    if (width <= 0) throw domain_error(origin + " must be positive, got " + source);
    return width;
}

void emit(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << "\n"; }

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact certificates for mapping tori of Kummer surface actions"};
    app.require_subcommand(1);

    std::string analyzeText;
    bool analyzeJson = false;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Betti numbers, Lefschetz ranks, and the formality witness");
    analyze->add_option("matrix", analyzeText, "matrix as a,b;c,d with entries like 1+1i")
        ->required();
    analyze->add_flag("--json", analyzeJson, "emit JSON instead of text");

    std::string certifyText, certifyWidth;
    bool certifyJson = false;
    CLI::App* certify =
        app.add_subcommand("certify", "nonkählerness certificate and jump loci");
    certify->add_option("matrix", certifyText, "matrix as a,b;c,d with entries like 1+1i")
        ->required();
    certify->add_flag("--json", certifyJson, "emit JSON instead of text");
    certify->add_option("--width", certifyWidth, "witness interval width as p/q");

    std::string compareLeft, compareRight;
    bool compareJson = false;
    CLI::App* compare =
        app.add_subcommand("compare", "order two matrices by largest real eigenvalue");
    compare->add_option("left", compareLeft, "first matrix")->required();
    compare->add_option("right", compareRight, "second matrix")->required();
    compare->add_flag("--json", compareJson, "emit JSON instead of text");

    int enumerateHeight = 0;
    bool enumerateJson = false, enumerateReference = false;
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "scan all gated matrices up to a coordinate height");
    enumerate->add_option("height", enumerateHeight, "max |coordinate part|")->required();
    enumerate->add_flag("--json", enumerateJson, "emit JSON instead of text");
    enumerate->add_flag("--reference", enumerateReference,
                        "use the serial full-matrix reference scan");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (*analyze) {
            const AnalysisReport rep = analyze_matrix(parse_matrix(analyzeText));
            if (analyzeJson)
                emit(out, to_json(rep));
            else
                out << to_text(rep);
        } else if (*certify) {
            const Rat width = resolve_width(certifyWidth);
            const CertifyReport rep = certify_matrix(parse_matrix(certifyText), width);
            if (certifyJson)
                emit(out, to_json(rep));
            else
                out << to_text(rep);
        } else if (*compare) {
            const GaussianMatrix2 left = parse_matrix(compareLeft);
            const GaussianMatrix2 right = parse_matrix(compareRight);
            const HomotopyComparison cmp = compare_homotopy_types(left, right);
            if (compareJson)
                emit(out, to_json(cmp, left, right));
            else
                out << to_text(cmp, left, right);
        } else if (*enumerate) {
            const FamilyReport rep = enumerateReference
                                         ? enumerate_family_reference(enumerateHeight)
                                         : enumerate_family(enumerateHeight);
            if (enumerateJson)
                emit(out, to_json(rep));
            else
                out << to_text(rep);
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        err << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
        return 1;
    } catch (const gate_error& e) {
        err << "gate failed: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace nk
