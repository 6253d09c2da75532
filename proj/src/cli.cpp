#include "powstruct/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "powstruct/errors.hpp"
#include "powstruct/expr.hpp"
#include "powstruct/finite_model.hpp"
#include "powstruct/lambda.hpp"
#include "powstruct/motivic.hpp"

namespace powstruct {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Text, Json };

// Usage problems detected after CLI11 accepted the command line.
class UsageError : public Error {
public:
    using Error::Error;
};

void emit_series(std::ostream& out, Format format, const Series& s) {
    const auto cs = format_coefficients(s);
    if (format == Format::Json) {
        ordered_json j;
        j["ring"] = s.ring().name();
        j["order"] = s.order();
        j["coefficients"] = cs;
        out << j.dump() << '\n';
        return;
    }
    out << "ring: " << s.ring().name() << '\n' << "order: " << s.order() << '\n';
    for (std::size_t k = 0; k < cs.size(); ++k) out << "t^" << k << ": " << cs[k] << '\n';
}

LambdaKind lambda_from(const std::string& name) {
    auto kind = parse_lambda_kind(name);
    if (!kind) throw UsageError("unknown lambda-structure '" + name + "'");
    return *kind;
}

std::vector<std::size_t> parse_sizes(const std::string& text, const char* what) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        piece.erase(std::remove(piece.begin(), piece.end(), ' '), piece.end());
        if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
            piece.size() > 6)
            throw UsageError(std::string(what) + ": expected a comma separated list of sizes, got '" + text + "'");
        out.push_back(std::stoul(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// x -> x mod target; the empty map when source is empty.
FiniteMap cyclic_map(std::size_t source, std::size_t target, const char* what) {
    if (source > 0 && target == 0)
        throw UsageError(std::string(what) + ": a nonempty set cannot map to the empty set");
    std::vector<std::size_t> values(source);
    for (std::size_t x = 0; x < source; ++x) values[x] = x % target;
    return FiniteMap(target, std::move(values));
}

struct Options {
    std::string format = "text";
    std::string ring = "Z";
    std::string lambda;
    std::size_t order = 0;
    std::string series;
    std::string exponent;
    std::string coefficients;
    std::string hodge;
    bool euler = false;
    bool local = false;
    std::size_t m_size = 0;
    std::size_t target_size = 1;
    std::string coeff_sizes;
    std::string coeff_target_sizes;
    std::uint64_t budget = kDefaultEnumerationBudget;
};

void run_oracle(const Options& o, Format format, std::ostream& out) {
    const FiniteMap exponent = cyclic_map(o.m_size, o.target_size, "--m-size/--target-size");
    const auto sizes = parse_sizes(o.coeff_sizes, "--coeff-sizes");
    std::vector<std::size_t> targets(sizes.size(), 1);
    if (!o.coeff_target_sizes.empty()) {
        targets = parse_sizes(o.coeff_target_sizes, "--coeff-target-sizes");
        if (targets.size() != sizes.size())
            throw UsageError("--coeff-target-sizes must list as many sizes as --coeff-sizes");
    }
    std::vector<FiniteMap> coeffs;
    for (std::size_t i = 0; i < sizes.size(); ++i) coeffs.push_back(cyclic_map(sizes[i], targets[i], "--coeff-sizes"));

    const Ring z;
    std::vector<Integer> base(o.order + 1, 0);
    base[0] = 1;
    for (std::size_t i = 0; i < sizes.size() && i + 1 <= o.order; ++i) base[i + 1] = sizes[i];
    const Series formula = integer_power_formula(Series::from_integers(z, o.order, base), class_of(exponent));

    std::vector<Integer> oracle{1};
    std::vector<Integer> particles{1};
    bool agree = true;
    for (std::uint32_t k = 1; k <= o.order; ++k) {
        const auto c = geometric_power_coefficient(exponent, coeffs, k, o.budget);
        oracle.push_back(c.value);
        particles.push_back(c.particle_count);
        agree = agree && c.consistent() && Polynomial(z, c.value) == formula[k];
    }
    const Series oracle_series = Series::from_integers(z, o.order, oracle);
    const char* verdict = agree ? "agree" : "disagree";

    if (format == Format::Json) {
        ordered_json j;
        j["ring"] = z.name();
        j["order"] = o.order;
        j["coefficients"] = format_coefficients(oracle_series);
        j["formula"] = format_coefficients(formula);
        j["verdict"] = verdict;
        out << j.dump() << '\n';
        return;
    }
    out << "ring: Z\norder: " << o.order << '\n';
    out << "exponent: " << exponent.source_size() << " -> " << exponent.target_size() << '\n';
    out << "coefficients:";
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out << " X" << (i + 1) << "=" << coeffs[i].source_size() << "->" << coeffs[i].target_size();
    out << '\n';
    for (std::size_t k = 0; k <= o.order; ++k)
        out << "t^" << k << ": oracle " << oracle[k] << ", particles " << particles[k] << ", formula "
            << formula[k] << '\n';
    out << "verdict: " << verdict << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact lambda-structures and power structures over commutative rings", "powstruct"};
    app.require_subcommand(1);
    app.failure_message([](const CLI::App*, const CLI::Error& e) { return "error: " + std::string(e.what()) + "\n"; });
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* power_cmd = app.add_subcommand("power", "A(t)^m through a lambda-structure");
    power_cmd->add_option("--ring", o.ring, "Coefficient ring: Z, Z[u,v], Z[L], Z[a,b,...]");
    power_cmd->add_option("--lambda", o.lambda, "kapranov | binomial | opposite | poly-product")->required();
    power_cmd->add_option("--order", o.order, "Truncation order N")->required();
    power_cmd->add_option("--series", o.series, "Unit series A(t)")->required();
    power_cmd->add_option("--exponent", o.exponent, "Exponent m in the ring")->required();

    auto* exp_cmd = app.add_subcommand("exp", "Exp(b_1 t + b_2 t^2 + ...) = prod lambda_{b_k}(t^k)");
    exp_cmd->add_option("--ring", o.ring, "Coefficient ring");
    exp_cmd->add_option("--lambda", o.lambda, "Lambda-structure")->required();
    exp_cmd->add_option("--order", o.order, "Truncation order N")->required();
    exp_cmd->add_option("--coefficients", o.coefficients, "b_1,b_2,... comma separated")->required();

    auto* log_cmd = app.add_subcommand("log", "Log of a unit series, printed as sum b_k t^k");
    log_cmd->add_option("--ring", o.ring, "Coefficient ring");
    log_cmd->add_option("--lambda", o.lambda, "Lambda-structure")->required();
    log_cmd->add_option("--order", o.order, "Truncation order N")->required();
    log_cmd->add_option("--series", o.series, "Unit series A(t)")->required();

    auto* zeta_cmd = app.add_subcommand("zeta", "Hodge-Deligne zeta series (1-t)^{-e}");
    zeta_cmd->add_option("--hodge", o.hodge, "Hodge-Deligne polynomial in u, v")->required();
    zeta_cmd->add_option("--order", o.order, "Truncation order N")->required();
    zeta_cmd->add_flag("--euler", o.euler, "Specialize u = v = 1");

    auto* hilb_cmd = app.add_subcommand("hilb", "Generating series of Hilbert schemes of points on a surface");
    auto* hodge_opt = hilb_cmd->add_option("--hodge", o.hodge, "Hodge-Deligne polynomial of the surface");
    auto* local_opt = hilb_cmd->add_flag("--local", o.local, "Punctual series over Z[L]");
    hodge_opt->excludes(local_opt);
    hilb_cmd->add_option("--order", o.order, "Truncation order N")->required();
    hilb_cmd->add_flag("--euler", o.euler, "Specialize to Euler characteristics");

    auto* oracle_cmd = app.add_subcommand("oracle", "Finite-set enumeration of the geometric power structure");
    oracle_cmd->add_option("--m-size", o.m_size, "Size of the exponent source M")->required();
    oracle_cmd->add_option("--target-size", o.target_size, "Size of the exponent target N");
    oracle_cmd->add_option("--coeff-sizes", o.coeff_sizes, "|X_1|,|X_2|,...")->required();
    oracle_cmd->add_option("--coeff-target-sizes", o.coeff_target_sizes, "|Y_1|,|Y_2|,... (default all 1)");
    oracle_cmd->add_option("--order", o.order, "Largest degree k")->required();
    oracle_cmd->add_option("--budget", o.budget, "Raw tuple budget per charge profile");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Format format = o.format == "json" ? Format::Json : Format::Text;
    try {
        if (power_cmd->parsed()) {
            const Ring ring = parse_ring(o.ring);
            const LambdaKind kind = lambda_from(o.lambda);
            const Series a = parse_series(o.series, ring, o.order, &err);
            const Polynomial m = parse_polynomial(o.exponent, ring);
            emit_series(out, format, power(a, m, kind));
        } else if (exp_cmd->parsed()) {
            const Ring ring = parse_ring(o.ring);
            const LambdaKind kind = lambda_from(o.lambda);
            auto bs = parse_polynomial_list(o.coefficients, ring);
            if (bs.size() > o.order) {
                err << "warning: " << bs.size() - o.order << " coefficients dropped beyond order " << o.order << '\n';
                bs.resize(o.order, Polynomial(ring));
            }
            bs.resize(o.order, Polynomial(ring));
            emit_series(out, format, exp_map(LogCoefficients{ring, std::move(bs)}, kind));
        } else if (log_cmd->parsed()) {
            const Ring ring = parse_ring(o.ring);
            const LambdaKind kind = lambda_from(o.lambda);
            const Series a = parse_series(o.series, ring, o.order, &err);
            const LogCoefficients b = log_map(a, kind);
            std::vector<Polynomial> cs{Polynomial(ring)};
            cs.insert(cs.end(), b.entries.begin(), b.entries.end());
            emit_series(out, format, Series(ring, o.order, std::move(cs)));
        } else if (zeta_cmd->parsed()) {
            const HodgePolynomial e(parse_polynomial(o.hodge, hodge_ring()));
            Series z = hodge_zeta(e, o.order);
            if (o.euler) z = specialize_series(z, Specialization::Euler);
            emit_series(out, format, z);
        } else if (hilb_cmd->parsed()) {
            Series h(Ring(), 0);
            if (o.local) {
                h = hilb_local_surface(o.order);
                if (o.euler) h = substitute(h, {{"L", Polynomial(Ring(), 1)}}, Ring());
            } else {
                if (o.hodge.empty()) throw UsageError("hilb needs --hodge <expr> or --local");
                h = hilb_surface(HodgePolynomial(parse_polynomial(o.hodge, hodge_ring())), o.order);
                if (o.euler) h = specialize_series(h, Specialization::Euler);
            }
            emit_series(out, format, h);
        } else if (oracle_cmd->parsed()) {
            run_oracle(o, format, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitOk;
}

}  // namespace powstruct
