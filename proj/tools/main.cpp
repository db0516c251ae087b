#include <complex>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetaverify/cli_format.hpp"
#include "zetaverify/domain.hpp"

namespace {

using zetaverify::CommandResult;
using zetaverify::CommandStatus;
using zetaverify::OutputFormat;

struct GlobalOptions {
    OutputFormat format = OutputFormat::table;
    int precision_bits = 53;
};

int emit(const CommandResult &result, const GlobalOptions &opts) {
    std::fputs(zetaverify::render(result, opts.format).c_str(), stdout);
    return zetaverify::exit_code(result.status);
}

int emit_invalid(const std::string &command,
                 std::vector<std::pair<std::string, std::string>> inputs,
                 const std::string &message, const GlobalOptions &opts) {
    return emit(zetaverify::invalid_input_result(command, std::move(inputs), message), opts);
}

std::vector<std::size_t> parse_levels(const std::string &spec) {
    std::vector<std::size_t> levels;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = spec.find(',', pos);
        const std::string part = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                             : comma - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("levels must be comma-separated positive integers");
        const unsigned long long v = std::stoull(part);
        if (v == 0) throw std::invalid_argument("levels must be positive");
        levels.push_back(static_cast<std::size_t>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return levels;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact and numerical checks around Bernoulli numbers, zeta(2m), and the "
                 "factorization of e^z - w"};
    app.require_subcommand(1);

    GlobalOptions opts;
    const std::map<std::string, OutputFormat> format_names{
        {"table", OutputFormat::table}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    app.add_option("--format", opts.format, "Output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
        ->default_str("table");
    app.add_option("--precision-bits", opts.precision_bits,
                   "Significand bits (reserved; only 53 is supported)");

    // bernoulli
    auto *bernoulli = app.add_subcommand("bernoulli", "Exact Bernoulli numbers B_0..B_n");
    bernoulli->fallthrough();
    unsigned long bern_n = 0;
    std::string bern_method = "both";
    bernoulli->add_option("--n", bern_n, "Highest index")->required();
    bernoulli->add_option("--method", bern_method, "recurrence | series | both")
        ->check(CLI::IsMember({"recurrence", "series", "both"}));

    // zeta-even
    auto *zeta = app.add_subcommand("zeta-even", "Exact zeta(2m) = q * pi^(2m) with a "
                                                 "partial-sum bracket check");
    zeta->fallthrough();
    unsigned zeta_m = 0;
    std::size_t zeta_terms = 10000;
    zeta->add_option("--m", zeta_m, "Index m in zeta(2m)")->required();
    zeta->add_option("--terms", zeta_terms, "Bracket partial-sum terms");

    // verify
    auto *verify = app.add_subcommand("verify", "Numerically verify an identity");
    verify->fallthrough();
    std::string verify_identity;
    std::string verify_input;
    std::size_t verify_terms = 100000;
    double verify_tol = 1e-12;
    verify->add_option("--identity", verify_identity, "theorem | corollary")
        ->required()
        ->check(CLI::IsMember({"theorem", "corollary"}));
    verify->add_option("--input", verify_input, "Complex literal a+bi")->required();
    verify->add_option("--terms", verify_terms, "Series terms");
    verify->add_option("--tol", verify_tol, "Round-off allowance scale");

    // hadamard
    auto *hadamard = app.add_subcommand("hadamard", "Truncated factorization of e^z - w");
    hadamard->fallthrough();
    std::string had_w, had_z;
    std::string had_levels = "100,1000,10000";
    hadamard->add_option("--w", had_w, "Complex literal a+bi")->required();
    hadamard->add_option("--z", had_z, "Complex literal a+bi")->required();
    hadamard->add_option("--levels", had_levels, "Comma-separated truncation levels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return zetaverify::exit_code(CommandStatus::invalid_input);
    }

    const std::string command = app.get_subcommands().front()->get_name();
    if (opts.precision_bits != 53)
        return emit_invalid(command, {{"precision-bits", std::to_string(opts.precision_bits)}},
                            "only 53 significand bits are supported", opts);

    try {
        if (*bernoulli) {
            const auto method = bern_method == "recurrence"
                                    ? zetaverify::BernoulliCliMethod::recurrence
                                : bern_method == "series" ? zetaverify::BernoulliCliMethod::series
                                                          : zetaverify::BernoulliCliMethod::both;
            return emit(zetaverify::bernoulli_command(bern_n, method), opts);
        }
        if (*zeta) {
            if (zeta_m == 0)
                return emit_invalid("zeta-even", {{"m", "0"}}, "m must be >= 1", opts);
            if (zeta_terms == 0)
                return emit_invalid("zeta-even", {{"terms", "0"}}, "terms must be >= 1", opts);
            return emit(zetaverify::zeta_even_command(zeta_m, zeta_terms), opts);
        }
        if (*verify) {
            const auto id = verify_identity == "theorem" ? zetaverify::Identity::theorem
                                                         : zetaverify::Identity::corollary;
            std::vector<std::pair<std::string, std::string>> inputs{
                {"identity", verify_identity},
                {"input", verify_input},
                {"terms", std::to_string(verify_terms)}};
            try {
                const std::complex<double> input = zetaverify::parse_complex(verify_input);
                if (verify_terms == 0) throw std::invalid_argument("terms must be >= 1");
                return emit(zetaverify::verify_command(id, input, verify_terms, verify_tol), opts);
            } catch (const std::invalid_argument &e) {
                return emit_invalid("verify", std::move(inputs), e.what(), opts);
            } catch (const zetaverify::domain_error &e) {
                return emit_invalid("verify", std::move(inputs), e.what(), opts);
            }
        }
        if (*hadamard) {
            std::vector<std::pair<std::string, std::string>> inputs{
                {"w", had_w}, {"z", had_z}, {"levels", had_levels}};
            try {
                const std::complex<double> w = zetaverify::parse_complex(had_w);
                const std::complex<double> z = zetaverify::parse_complex(had_z);
                const std::vector<std::size_t> levels = parse_levels(had_levels);
                return emit(zetaverify::hadamard_command(w, z, levels), opts);
            } catch (const std::invalid_argument &e) {
                return emit_invalid("hadamard", std::move(inputs), e.what(), opts);
            } catch (const zetaverify::domain_error &e) {
                return emit_invalid("hadamard", std::move(inputs), e.what(), opts);
            }
        }
    } catch (const zetaverify::domain_error &e) {
        return emit_invalid(command, {}, e.what(), opts);
    } catch (const std::invalid_argument &e) {
        return emit_invalid(command, {}, e.what(), opts);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return zetaverify::exit_code(CommandStatus::invalid_input);
    }
    return zetaverify::exit_code(CommandStatus::invalid_input);
}
