#ifndef ZETAVERIFY_CLI_FORMAT_HPP
#define ZETAVERIFY_CLI_FORMAT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zetaverify/identity.hpp"

namespace zetaverify {

enum class CommandStatus { ok = 0, invalid_input = 2, verification_failed = 3 };

/// Process exit code for a status; no other codes occur on handled paths.
int exit_code(CommandStatus status);

std::string to_string(CommandStatus status);

enum class OutputFormat { table, json, csv };

/// One command's machine-readable outcome. JSON serialization follows the
/// fixed schema {command, inputs, result, status}; identical inputs produce
/// byte-identical output.
struct CommandResult {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    nlohmann::json result;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    CommandStatus status = CommandStatus::ok;
};

std::string render(const CommandResult &r, OutputFormat format);

/// Shortest representation that round-trips the exact double value.
std::string format_double(double x);

/// "a+bi" / "a-bi" with round-trip components.
std::string format_complex(const std::complex<double> &z);

/// Parses "a+bi" / "a-bi" (decimal components, optional exponent), a plain
/// real "a", or a pure imaginary "bi". No expression evaluation. Throws
/// std::invalid_argument on anything else.
std::complex<double> parse_complex(std::string_view text);

enum class BernoulliCliMethod { recurrence, series, both };

CommandResult bernoulli_command(unsigned long n, BernoulliCliMethod method);
CommandResult zeta_even_command(unsigned m, std::size_t bracket_terms);
CommandResult verify_command(Identity identity, const std::complex<double> &input,
                             std::size_t terms, double tol);
CommandResult hadamard_command(const std::complex<double> &w, const std::complex<double> &z,
                               std::span<const std::size_t> levels);

/// Uniform invalid-input result (status invalid_input, message in result).
CommandResult invalid_input_result(const std::string &command,
                                   std::vector<std::pair<std::string, std::string>> inputs,
                                   const std::string &message);

} // namespace zetaverify

#endif
