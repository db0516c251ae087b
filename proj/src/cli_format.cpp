#include "zetaverify/cli_format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zetaverify/bernoulli.hpp"
#include "zetaverify/hadamard.hpp"
#include "zetaverify/zeta_even.hpp"

namespace zetaverify {

namespace {

nlohmann::json complex_json(const std::complex<double> &z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

std::string identity_name(Identity id) {
    return id == Identity::theorem ? "theorem" : "corollary";
}

double parse_double_strict(std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1); // from_chars takes no '+'
    double v = 0.0;
    const char *first = digits.data(), *last = digits.data() + digits.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last || !std::isfinite(v))
        throw std::invalid_argument("bad numeric component \"" + std::string(s) + "\"");
    return v;
}

std::string csv_escape(const std::string &field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

int exit_code(CommandStatus status) { return static_cast<int>(status); }

std::string to_string(CommandStatus status) {
    switch (status) {
        case CommandStatus::ok: return "ok";
        case CommandStatus::invalid_input: return "invalid_input";
        case CommandStatus::verification_failed: return "verification_failed";
    }
    return "unknown";
}

std::string format_double(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

std::string format_complex(const std::complex<double> &z) {
    std::string out = format_double(z.real());
    const double im = z.imag();
    if (!std::signbit(im)) out += '+';
    out += format_double(im);
    out += 'i';
    return out;
}

std::complex<double> parse_complex(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    const bool has_i = s.back() == 'i';
    if (!has_i) return {parse_double_strict(s), 0.0};

    s.remove_suffix(1); // drop 'i'
    if (s.empty()) throw std::invalid_argument("complex literal needs explicit digits");
    // Split at the last '+'/'-' that is neither leading nor an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) return {0.0, parse_double_strict(s)};
    return {parse_double_strict(s.substr(0, split)), parse_double_strict(s.substr(split))};
}

std::string render(const CommandResult &r, OutputFormat format) {
    if (format == OutputFormat::json) {
        nlohmann::json inputs = nlohmann::json::object();
        for (const auto &[k, v] : r.inputs) inputs[k] = v;
        const nlohmann::json doc = {{"command", r.command},
                                    {"inputs", inputs},
                                    {"result", r.result},
                                    {"status", to_string(r.status)}};
        return doc.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        for (std::size_t i = 0; i < r.csv_header.size(); ++i)
            out << (i ? "," : "") << csv_escape(r.csv_header[i]);
        out << '\n';
        for (const auto &row : r.csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
            out << '\n';
        }
        return out.str();
    }

    // Human-readable table.
    std::ostringstream out;
    out << "command: " << r.command << '\n';
    for (const auto &[k, v] : r.inputs) out << "  " << k << " = " << v << '\n';
    if (!r.csv_header.empty()) {
        std::vector<std::size_t> width(r.csv_header.size());
        for (std::size_t i = 0; i < r.csv_header.size(); ++i) width[i] = r.csv_header[i].size();
        for (const auto &row : r.csv_rows)
            for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        auto emit = [&](const std::vector<std::string> &row) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "  " : "  ");
                out << row[i] << std::string(width[i] - row[i].size(), ' ');
            }
            out << '\n';
        };
        emit(r.csv_header);
        for (const auto &row : r.csv_rows) emit(row);
    }
    out << "status: " << to_string(r.status) << '\n';
    return out.str();
}

CommandResult bernoulli_command(unsigned long n, BernoulliCliMethod method) {
    CommandResult r;
    r.command = "bernoulli";
    const char *method_name = method == BernoulliCliMethod::recurrence ? "recurrence"
                              : method == BernoulliCliMethod::series   ? "series"
                                                                       : "both";
    r.inputs = {{"n", std::to_string(n)}, {"method", method_name}};
    r.result["n"] = n;
    r.result["method"] = method_name;

    auto to_strings = [](const BernoulliTable &t) {
        std::vector<std::string> v;
        v.reserve(t.values.size());
        for (const Rational &b : t.values) v.push_back(b.str());
        return v;
    };

    if (method == BernoulliCliMethod::both) {
        const auto rec = to_strings(bernoulli_recurrence(n));
        const auto ser = to_strings(bernoulli_series_division(n));
        r.result["values_recurrence"] = rec;
        r.result["values_series_division"] = ser;
        r.result["agreement"] = (rec == ser);
        r.csv_header = {"k", "recurrence", "series_division"};
        for (std::size_t k = 0; k <= n; ++k)
            r.csv_rows.push_back({std::to_string(k), rec[k], ser[k]});
    } else {
        const BernoulliTable t = method == BernoulliCliMethod::recurrence
                                     ? bernoulli_recurrence(n)
                                     : bernoulli_series_division(n);
        const auto vals = to_strings(t);
        r.result["values"] = vals;
        r.csv_header = {"k", "value"};
        for (std::size_t k = 0; k <= n; ++k) r.csv_rows.push_back({std::to_string(k), vals[k]});
    }
    return r;
}

CommandResult zeta_even_command(unsigned m, std::size_t bracket_terms) {
    CommandResult r;
    r.command = "zeta-even";
    r.inputs = {{"m", std::to_string(m)}, {"terms", std::to_string(bracket_terms)}};
    const ZetaEvenValue v = zeta_even_exact(m);
    const double decimal = zeta_even_to_double(v);
    const NumericBracket bracket = zeta_even_partial_sum(m, bracket_terms);
    const bool contained = bracket.contains(decimal);
    r.result = {{"m", m},
                {"q", v.q.str()},
                {"decimal", decimal},
                {"bracket", {{"terms", bracket_terms}, {"lower", bracket.lower}, {"upper", bracket.upper}}},
                {"contained", contained}};
    r.csv_header = {"m", "q", "decimal", "bracket_lower", "bracket_upper", "bracket_terms", "contained"};
    r.csv_rows = {{std::to_string(m), v.q.str(), format_double(decimal), format_double(bracket.lower),
                   format_double(bracket.upper), std::to_string(bracket_terms),
                   contained ? "true" : "false"}};
    return r;
}

CommandResult verify_command(Identity identity, const std::complex<double> &input,
                             std::size_t terms, double tol) {
    CommandResult r;
    r.command = "verify";
    r.inputs = {{"identity", identity_name(identity)},
                {"input", format_complex(input)},
                {"terms", std::to_string(terms)},
                {"tol", format_double(tol)}};
    const VerificationReport rep = verify(identity, input, terms, tol);
    r.result = {{"identity", identity_name(identity)},
                {"input", complex_json(rep.input)},
                {"terms", rep.terms},
                {"lhs", complex_json(rep.lhs)},
                {"rhs_partial", complex_json(rep.rhs_partial)},
                {"tail_estimate", complex_json(rep.tail_estimate)},
                {"remainder_bound", rep.remainder_bound},
                {"discrepancy", rep.discrepancy},
                {"evaluation_epsilon", rep.evaluation_epsilon},
                {"pass", rep.pass}};
    r.csv_header = {"identity", "input", "terms", "lhs_re", "lhs_im", "rhs_partial_re",
                    "rhs_partial_im", "tail_estimate_re", "tail_estimate_im",
                    "remainder_bound", "discrepancy", "evaluation_epsilon", "pass"};
    r.csv_rows = {{identity_name(identity), format_complex(rep.input), std::to_string(rep.terms),
                   format_double(rep.lhs.real()), format_double(rep.lhs.imag()),
                   format_double(rep.rhs_partial.real()), format_double(rep.rhs_partial.imag()),
                   format_double(rep.tail_estimate.real()), format_double(rep.tail_estimate.imag()),
                   format_double(rep.remainder_bound), format_double(rep.discrepancy),
                   format_double(rep.evaluation_epsilon), rep.pass ? "true" : "false"}};
    r.status = rep.pass ? CommandStatus::ok : CommandStatus::verification_failed;
    return r;
}

CommandResult hadamard_command(const std::complex<double> &w, const std::complex<double> &z,
                               std::span<const std::size_t> levels) {
    CommandResult r;
    r.command = "hadamard";
    std::string levels_str;
    for (std::size_t i = 0; i < levels.size(); ++i)
        levels_str += (i ? "," : "") + std::to_string(levels[i]);
    r.inputs = {{"w", format_complex(w)}, {"z", format_complex(z)}, {"levels", levels_str}};

    const PrefactorConstants pre = prefactors(w);
    const auto report = factorization_report(w, z, levels);
    const std::size_t s1_n = *std::max_element(levels.begin(), levels.end());
    const std::complex<double> s1 = s1_partial(w, s1_n);
    const double dist_half = std::abs(s1 + pre.a1 - 0.5);

    nlohmann::json level_rows = nlohmann::json::array();
    for (const auto &e : report)
        level_rows.push_back({{"half_count", e.half_count}, {"abs_error", e.abs_error}});
    r.result = {{"w", complex_json(w)},
                {"z", complex_json(z)},
                {"a0", complex_json(pre.a0)},
                {"a1", complex_json(pre.a1)},
                {"levels", level_rows},
                {"s1", {{"half_count", s1_n},
                        {"value", complex_json(s1)},
                        {"abs_s1_plus_a1_minus_half", dist_half}}}};
    r.csv_header = {"half_count", "abs_error", "s1_half_count", "s1_re", "s1_im",
                    "abs_s1_plus_a1_minus_half"};
    for (const auto &e : report)
        r.csv_rows.push_back({std::to_string(e.half_count), format_double(e.abs_error),
                              std::to_string(s1_n), format_double(s1.real()),
                              format_double(s1.imag()), format_double(dist_half)});
    return r;
}

CommandResult invalid_input_result(const std::string &command,
                                   std::vector<std::pair<std::string, std::string>> inputs,
                                   const std::string &message) {
    CommandResult r;
    r.command = command;
    r.inputs = std::move(inputs);
    r.result = {{"error", message}};
    r.csv_header = {"error"};
    r.csv_rows = {{message}};
    r.status = CommandStatus::invalid_input;
    return r;
}

} // namespace zetaverify
