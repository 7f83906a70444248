#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fbc/classify.hpp"
#include "fbc/flat.hpp"
#include "fbc/report.hpp"
#include "fbc/survey.hpp"
#include "fbc/version.hpp"
#include "fbc/word.hpp"

namespace {

// exit codes: 0 ok, 1 word parse error, 2 usage/cap error, 3 hypothesis violation
constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kUsageError = 2;
constexpr int kHypothesisError = 3;

constexpr int kSurveyCap = 12;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

fbc::Word parse_word_or_exit(const std::string& text) {
    try {
        return fbc::Word::parse(text);
    } catch (const fbc::WordParseError& e) {
        std::cerr << "parse error at offset " << e.position() << ": " << e.what() << "\n";
        std::exit(kParseError);
    }
}

fbc::Json input_echo(const fbc::AutomorphismSpec& spec, const std::string& raw) {
    fbc::Json j;
    j["k"] = spec.twist_exponent;
    j["w"] = spec.twisting_word.str();
    j["w_raw"] = raw;
    return j;
}

int cmd_classify(long long k, const std::string& word_text, bool json) {
    const fbc::Word raw = parse_word_or_exit(word_text);
    const fbc::AutomorphismSpec spec = fbc::normalize_spec(k, raw);
    const fbc::Classification c = fbc::classify(spec);
    const auto notes = fbc::citation_notes(spec, c);
    if (json) {
        std::cout << fbc::envelope(input_echo(spec, word_text),
                                   fbc::classification_json(c), notes)
                         .dump(2)
                  << "\n";
    } else {
        std::cout << fbc::classification_text(spec, c);
    }
    return kOk;
}

int cmd_profile(const std::string& word_text, bool json) {
    const fbc::Word raw = parse_word_or_exit(word_text);
    const fbc::Word core = fbc::cyclic_reduce(raw).core;
    if (core.empty()) {
        std::cerr << "hypothesis violation: the twisting word is trivial, no level decomposition\n";
        return kHypothesisError;
    }
    if (!fbc::is_b_balanced(core)) {
        std::cerr << "hypothesis violation: word is not b-balanced (b-exponent sum = "
                  << fbc::exponent_sum(core, fbc::Gen::b) << ")\n";
        return kHypothesisError;
    }
    const fbc::LevelProfile p = fbc::level_profile(core);
    if (json) {
        fbc::Json in;
        in["w"] = core.str();
        in["w_raw"] = word_text;
        std::cout << fbc::envelope(std::move(in), fbc::profile_json(p), {}).dump(2) << "\n";
        return kOk;
    }
    std::cout << "word: " << core.str() << "\n";
    std::cout << "h=" << p.height << " j0=" << p.starting_level << " N=[";
    for (std::size_t j = 0; j < p.weights.size(); ++j)
        std::cout << (j ? "," : "") << p.weights[j];
    std::cout << "]\n";
    std::cout << "totally balanced: " << (fbc::is_totally_balanced(p) ? "yes" : "no") << "\n\n";
    std::cout << fbc::level_diagram(core, p);
    return kOk;
}

int cmd_sweep(long long k, const std::string& word_text, int grid, const std::string& out_path) {
    const fbc::Word raw = parse_word_or_exit(word_text);
    const fbc::AutomorphismSpec spec = fbc::normalize_spec(k, raw);
    const fbc::Word& w = spec.twisting_word;
    if (w.empty() || !fbc::is_b_balanced(w)) {
        std::cerr << "hypothesis violation: delta needs a nonempty b-balanced twisting word\n";
        return kHypothesisError;
    }
    const fbc::LevelProfile p = fbc::level_profile(w);

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open output path: " << out_path << "\n";
            return kUsageError;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    out << "theta,delta\n";
    for (int i = 1; i <= grid; ++i) {
        const double theta = std::numbers::pi * i / static_cast<double>(grid + 1);
        out << format_double(theta) << "," << format_double(fbc::delta(p, k, theta)) << "\n";
    }
    const auto cert = fbc::find_theta_certificate(p, k, w.letter_length());
    if (cert) out << "# certificate " << fbc::certificate_json(*cert).dump() << "\n";
    return kOk;
}

int cmd_survey(int max_len, const std::vector<long long>& ks, const std::string& out_path,
               bool json) {
    if (max_len > kSurveyCap) {
        std::cerr << "max length " << max_len << " exceeds the cap of " << kSurveyCap << "\n";
        return kUsageError;
    }
    const fbc::SurveyReport report = fbc::run_survey(max_len, ks);
    fbc::Json in;
    in["max_length"] = max_len;
    in["k_range"] = ks;
    const fbc::Json env = fbc::envelope(std::move(in), fbc::survey_json(report), {});
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "cannot open output path: " << out_path << "\n";
            return kUsageError;
        }
        file << env.dump(2) << "\n";
    }
    if (json)
        std::cout << env.dump(2) << "\n";
    else
        std::cout << fbc::survey_table(report);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CAT(0) classification of F3-by-Z suspensions of UPG automorphisms\n"
                 "(a -> a, b -> b a^k, c -> c w(a,b); words over a b A B with ^n exponents)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fbc::kToolName) + " " + fbc::kToolVersion);

    long long k = 0;
    std::string word_text;
    bool json = false;
    int grid = 1000;
    int max_len = 0;
    std::vector<long long> ks;
    std::string out_path;

    auto* classify = app.add_subcommand("classify", "classify one automorphism");
    classify->add_option("-k,--twist", k, "twist exponent k in b -> b a^k")->required();
    classify->add_option("-w,--word", word_text, "twisting word w(a,b)")->required();
    classify->add_flag("--json", json, "emit the JSON envelope");

    auto* profile = app.add_subcommand("profile", "level decomposition of a twisting word");
    profile->add_option("-w,--word", word_text, "twisting word w(a,b)")->required();
    profile->add_flag("--json", json, "emit the JSON envelope");

    auto* sweep = app.add_subcommand("sweep", "CSV sweep of delta(theta) over (0, pi)");
    sweep->add_option("-k,--twist", k, "twist exponent k (positive)")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("-w,--word", word_text, "twisting word w(a,b)")->required();
    sweep->add_option("-n,--grid", grid, "number of CSV grid points")
        ->default_val(1000)
        ->check(CLI::PositiveNumber);
    sweep->add_option("-o,--output", out_path, "CSV output path (default stdout)");

    auto* survey = app.add_subcommand("survey", "classify all words up to a length bound");
    survey->add_option("-L,--max-length", max_len, "letter-length bound (cap 12)")->required();
    survey->add_option("-k,--twist", ks, "twist exponents to survey (repeatable)")
        ->required()
        ->check(CLI::PositiveNumber);
    survey->add_option("-o,--output", out_path, "JSON report path");
    survey->add_flag("--json", json, "print the JSON envelope instead of the table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    if (classify->parsed()) return cmd_classify(k, word_text, json);
    if (profile->parsed()) return cmd_profile(word_text, json);
    if (sweep->parsed()) return cmd_sweep(k, word_text, grid, out_path);
    if (survey->parsed()) return cmd_survey(max_len, ks, out_path, json);
    return kUsageError;
}
