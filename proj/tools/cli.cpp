#include "cli.hpp"

#include <chrono>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gf2max/gf2max.hpp"

namespace gf2max::cli {

namespace {

using json = nlohmann::json;

enum class Format { text, json, hex };

struct RunConfig {
    int n = 0;
    std::string poly;
    std::string mode = "exhaustive";
    std::size_t count = 10;
    std::uint64_t seed = 0;
    std::string format = "text";
    bool timings = false;
    unsigned threads = 1;
    std::string matrix;
    std::string state;
    std::uint64_t steps = 0;
    Limits limits;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Format parse_format(const std::string& text)
{
    if (text == "text")
        return Format::text;
    if (text == "json")
        return Format::json;
    return Format::hex;
}

// Integers that fit in 64 bits stay JSON numbers; larger ones become decimal strings.
json big_to_json(const BigInt& value)
{
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::uint64_t>(value);
    return to_decimal(value);
}

json code_to_json(const Gf2Mat& m)
{
    if (m.size() <= 8)
        return encode_u64(m);
    return format_code(m);
}

std::string product_expansion(int n, int first)
{
    if (n - first < 1)
        return "1";
    if (n > 16)
        return "";
    std::string out;
    const std::uint64_t full = std::uint64_t{1} << n;
    for (int i = first; i < n; ++i)
        out += "(" + std::to_string(full) + "-" + std::to_string(std::uint64_t{1} << i) + ")";
    return out;
}

int cmd_count(const RunConfig& cfg, std::ostream& out)
{
    const int n = cfg.n;
    const auto fact = factor_mersenne(n, cfg.limits);
    const BigInt gl = gl_order(n);
    const std::uint64_t phi = totient(fact);
    const std::uint64_t polys = phi / static_cast<std::uint64_t>(n);
    const BigInt per_poly = class_size(n);
    const BigInt total = per_poly * polys;

    if (parse_format(cfg.format) == Format::json) {
        out << json{{"n", n},
                    {"gl_order", big_to_json(gl)},
                    {"mersenne", fact.value},
                    {"totient", phi},
                    {"primitive_polynomials", polys},
                    {"class_size", big_to_json(per_poly)},
                    {"total", big_to_json(total)}}
                   .dump()
            << '\n';
        return kExitOk;
    }

    auto expanded = [](const std::string& expansion) { return expansion.empty() ? "" : " = " + expansion; };
    out << "n = " << n << '\n';
    out << "|GL_n(GF(2))| = prod_{i=0}^{n-1} (2^n - 2^i)" << expanded(product_expansion(n, 0)) << " = "
        << to_decimal(gl) << '\n';
    out << "primitive polynomials = Phi(2^n-1)/n = Phi(" << fact.value << ")/" << n << " = " << phi << "/" << n
        << " = " << polys << '\n';
    out << "matrices per polynomial = prod_{i=1}^{n-1} (2^n - 2^i)" << expanded(product_expansion(n, 1)) << " = "
        << to_decimal(per_poly) << '\n';
    out << "total of order 2^n-1 = " << to_decimal(per_poly) << " * " << polys << " = " << to_decimal(total)
        << '\n';
    return kExitOk;
}

int cmd_polys(const RunConfig& cfg, std::ostream& out)
{
    const auto polys = enumerate_primitive(cfg.n, cfg.limits);
    if (parse_format(cfg.format) == Format::json) {
        json list = json::array();
        for (const auto& f : polys)
            list.push_back({{"polynomial", to_string(f)}, {"code", big_to_json(f.to_bigint())}});
        out << json{{"n", cfg.n}, {"count", polys.size()}, {"polynomials", list}}.dump() << '\n';
        return kExitOk;
    }
    for (const auto& f : polys)
        out << to_string(f) << " (" << to_integer_string(f) << ")\n";
    return kExitOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto started = std::chrono::steady_clock::now();
    const Gf2Poly f = parse_poly(cfg.poly);
    const auto degree = f.degree();
    if (!degree || *degree == 0)
        throw UsageError("polynomial must have positive degree");
    if (cfg.n != 0 && static_cast<std::size_t>(cfg.n) != *degree)
        throw UsageError("--n " + std::to_string(cfg.n) + " does not match the degree of " + to_string(f));

    const GenerationMode mode = parse_generation_mode(cfg.mode);
    const ConjClassReport report = mode == GenerationMode::exhaustive
                                       ? conjugacy_class(f, cfg.limits)
                                       : sample_conjugates(f, cfg.count, cfg.seed, cfg.limits);
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

    if (parse_format(cfg.format) == Format::json) {
        json codes = json::array();
        for (const auto& m : report.matrices)
            codes.push_back(code_to_json(m));
        json doc{{"n", report.n},
                 {"polynomial", to_string(report.polynomial)},
                 {"mode", to_string(report.mode)},
                 {"seed", report.seed ? json(*report.seed) : json(nullptr)},
                 {"count", report.matrices.size()},
                 {"codes", codes},
                 {"timings", cfg.timings ? json{{"total_ms", elapsed_ms}} : json::object()}};
        out << doc.dump() << '\n';
    } else {
        for (const auto& m : report.matrices)
            out << format_code(m) << '\n';
    }
    if (report.duplicates)
        err << "note: " << report.duplicates << " duplicate matrices in the sample\n";
    if (cfg.timings && parse_format(cfg.format) != Format::json)
        err << "time: " << elapsed_ms << " ms\n";
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const VerificationReport report = verify_dimension(cfg.n, cfg.limits, cfg.threads);
    if (parse_format(cfg.format) == Format::json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out << json{{"n", report.n}, {"passed", report.passed()}, {"checks", checks}}.dump() << '\n';
    } else {
        for (const auto& c : report.checks)
            out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        out << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return report.passed() ? kExitOk : kExitFailure;
}

std::optional<int> dimension(const RunConfig& cfg)
{
    return cfg.n ? std::optional<int>(cfg.n) : std::nullopt;
}

int cmd_encode(const RunConfig& cfg, std::ostream& out)
{
    const Gf2Mat m = parse_matrix(cfg.matrix, dimension(cfg));
    if (parse_format(cfg.format) == Format::json)
        out << json{{"n", m.size()}, {"code", code_to_json(m)}}.dump() << '\n';
    else
        out << format_code(m) << '\n';
    return kExitOk;
}

int cmd_decode(const RunConfig& cfg, std::ostream& out)
{
    const Gf2Mat m = parse_matrix(cfg.matrix, dimension(cfg));
    if (parse_format(cfg.format) == Format::json) {
        json rows = json::array();
        for (int i = 0; i < m.size(); ++i)
            rows.push_back(format_state(m.row(i), m.size()));
        out << json{{"n", m.size()}, {"code", code_to_json(m)}, {"rows", rows}}.dump() << '\n';
    } else {
        out << format_grid(m) << '\n';
    }
    return kExitOk;
}

int cmd_stream(const RunConfig& cfg, std::ostream& out)
{
    const Gf2Mat m = parse_matrix(cfg.matrix, dimension(cfg));
    const int n = m.size();
    const Gf2Vec seed = cfg.state.empty() ? Gf2Vec{1} : parse_state(cfg.state, n);
    std::uint64_t steps = cfg.steps;
    if (steps == 0) {
        if (n > 20)
            throw UsageError("--steps is required for n > 20");
        steps = low_mask(n);
    }

    StateStream stream(m, seed);
    const Format format = parse_format(cfg.format);
    json states = json::array();
    if (format == Format::hex)
        out << "n=" << n << '\n';
    for (std::uint64_t k = 0; k < steps; ++k) {
        const Gf2Vec s = stream.next();
        switch (format) {
        case Format::text:
            out << format_state(s, n) << '\n';
            break;
        case Format::hex:
            out << to_hex(BigInt(s)) << '\n';
            break;
        case Format::json:
            states.push_back(format_state(s, n));
            break;
        }
    }
    if (format == Format::json)
        out << json{{"n", n}, {"seed", format_state(seed, n)}, {"steps", steps}, {"states", states}}.dump() << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Generate, count and verify n x n matrices of maximal order 2^n-1 over GF(2)", "gf2max"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "hex"}))
        ->capture_default_str();
    app.add_flag("--timings", cfg.timings, "Report elapsed time (JSON timings field or stderr)");
    app.add_option("--threads", cfg.threads, "Worker threads for the census scan")->check(CLI::Range(1u, 256u));
    app.add_option("--cap-enum", cfg.limits.enumeration, "Primitive polynomial enumeration cap")
        ->capture_default_str();
    app.add_option("--cap-factor", cfg.limits.factoring, "Mersenne factoring cap (at most 64)")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    app.add_option("--cap-brute", cfg.limits.brute_force, "Full code-space scan cap")->capture_default_str();
    app.add_option("--cap-gl", cfg.limits.exhaustive, "GL_n enumeration and coset walk cap")->capture_default_str();
    app.add_option("--cap-order", cfg.limits.order_steps, "Iteration cap for order computation")
        ->capture_default_str();

    auto add_n = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--n,-n", cfg.n, "Matrix dimension / polynomial degree")->check(CLI::Range(1, 64));
        if (required)
            opt->required();
    };

    auto* count = app.add_subcommand("count", "Count GL_n, primitive polynomials and maximal-order matrices");
    add_n(count, true);

    auto* polys = app.add_subcommand("polys", "List the primitive polynomials of degree n");
    add_n(polys, true);

    auto* gen = app.add_subcommand("gen", "Generate matrices conjugate to the companion of a primitive polynomial");
    add_n(gen, false);
    gen->add_option("--poly,-p", cfg.poly, "Primitive polynomial, e.g. x^3+x+1 or 11")->required();
    gen->add_option("--mode", cfg.mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}))
        ->capture_default_str();
    gen->add_option("--count", cfg.count, "Number of sampled conjugates")->capture_default_str();
    gen->add_option("--seed", cfg.seed, "RNG seed for sampled mode")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Cross-check the counting formula against brute force");
    add_n(verify, true);

    auto* encode_cmd = app.add_subcommand("encode", "Print the integer code of a matrix");
    add_n(encode_cmd, false);
    encode_cmd->add_option("matrix", cfg.matrix, "Grid such as 001/101/010, or a code")->required();

    auto* decode_cmd = app.add_subcommand("decode", "Print the 0/1 grid of a matrix code");
    add_n(decode_cmd, false);
    decode_cmd->add_option("code", cfg.matrix, "Decimal or 0x-hex code")->required();

    auto* stream_cmd = app.add_subcommand("stream", "Emit the state sequence s -> A s");
    add_n(stream_cmd, false);
    stream_cmd->add_option("matrix", cfg.matrix, "Matrix code or grid")->required();
    stream_cmd->add_option("--seed", cfg.state, "Initial state as n characters of 0/1 (default e_0)");
    stream_cmd->add_option("--steps", cfg.steps, "Number of states to emit (default 2^n-1)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    if (parse_format(cfg.format) == Format::hex && !stream_cmd->parsed()) {
        err << "error: --format hex only applies to stream\n";
        return kExitUsage;
    }

    try {
        if (count->parsed())
            return cmd_count(cfg, out);
        if (polys->parsed())
            return cmd_polys(cfg, out);
        if (gen->parsed())
            return cmd_gen(cfg, out, err);
        if (verify->parsed())
            return cmd_verify(cfg, out);
        if (encode_cmd->parsed())
            return cmd_encode(cfg, out);
        if (decode_cmd->parsed())
            return cmd_decode(cfg, out);
        if (stream_cmd->parsed())
            return cmd_stream(cfg, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace gf2max::cli
