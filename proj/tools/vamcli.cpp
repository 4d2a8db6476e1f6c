// Command-line front end: closed-form and supremum-based metric evaluation,
// verification suites, sharpness sweeps, and constant estimation.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vam/vam.hpp"

using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_domain = 2;
constexpr int exit_violation = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_error(const std::string& code, const std::string& message) {
    json err{{"error", {{"code", code}, {"message", message}}}};
    std::cout << err.dump() << "\n";
}

std::vector<double> parse_coords(const std::string& text) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw UsageError("empty coordinate in '" + text + "'");
        double value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw UsageError("cannot parse coordinate '" + tok + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    (void)ec;
    return std::string(buf, p);
}

vam::DomainSpec load_domain(const std::string& spec, int n) {
    if (spec == "ball") return vam::DomainSpec::unit_ball(n);
    if (spec == "halfspace") return vam::DomainSpec::half_space(n);
    if (spec == "punctured") return vam::DomainSpec::punctured_space(n);

    std::ifstream in(spec);
    if (!in) throw UsageError("unknown domain '" + spec + "' (not a builtin name or readable file)");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw UsageError(std::string("domain file does not parse: ") + e.what());
    }
    std::string type = doc.value("type", "");
    int file_n = doc.value("n", 2);
    if (type == "ball") return vam::DomainSpec::unit_ball(file_n);
    if (type == "halfspace") return vam::DomainSpec::half_space(file_n);
    if (type == "punctured") return vam::DomainSpec::punctured_space(file_n);
    if (type == "polygon") {
        if (file_n != 2) vam::fail(vam::errc::invalid_parameter, "polygon domains are planar");
        std::vector<std::array<double, 2>> vertices;
        for (const auto& v : doc.at("vertices"))
            vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
        return vam::DomainSpec::polygon(vertices);
    }
    throw UsageError("domain file has unknown type '" + type + "'");
}

json report_to_json(const vam::VerificationReport& rep) {
    json j{{"suite_id", rep.suite_id},
           {"trials", rep.trials},
           {"violations", rep.violations},
           {"worst_margin", rep.worst_margin},
           {"seed", rep.seed}};
    if (rep.estimate) j["estimate"] = *rep.estimate;
    else j["estimate"] = nullptr;
    json details = json::object();
    for (const auto& [k, v] : rep.details) details[k] = v;
    j["details"] = details;
    json sweep = json::array();
    for (const auto& row : rep.sweep) sweep.push_back({{"param", row.param}, {"value", row.value}});
    j["sweep"] = sweep;
    return j;
}

void print_report(const vam::VerificationReport& rep, const std::string& format) {
    if (format == "csv") {
        std::cout << "field,value\n";
        std::cout << "trials," << rep.trials << "\n";
        std::cout << "violations," << rep.violations << "\n";
        std::cout << "worst_margin," << format_double(rep.worst_margin) << "\n";
        std::cout << "seed," << rep.seed << "\n";
        if (rep.estimate) std::cout << "estimate," << format_double(*rep.estimate) << "\n";
        for (const auto& [k, v] : rep.details) std::cout << k << "," << format_double(v) << "\n";
        if (!rep.sweep.empty()) {
            std::cout << "param,value\n";
            for (const auto& row : rep.sweep)
                std::cout << format_double(row.param) << "," << format_double(row.value) << "\n";
        }
    } else {
        std::cout << report_to_json(rep).dump() << "\n";
    }
}

struct DistArgs {
    std::string metric, domain, xs, ys, method = "auto";
    int n = 0;
    int coarse = 4096;
};

int run_dist(const DistArgs& a) {
    vam::Point x{parse_coords(a.xs)};
    vam::Point y{parse_coords(a.ys)};
    if (x.dim() != y.dim()) vam::fail(vam::errc::dimension_mismatch, "x and y have different dimensions");
    if (a.n > 0 && a.n != x.dim())
        vam::fail(vam::errc::dimension_mismatch, "coordinate count does not match --n");
    vam::DomainSpec dom = load_domain(a.domain, x.dim());
    if (dom.dim() != x.dim()) vam::fail(vam::errc::dimension_mismatch, "points do not match the domain dimension");
    vam::require_in_domain(dom, x, "x");
    vam::require_in_domain(dom, y, "y");

    vam::SamplerOptions opts;
    opts.coarse_count = a.coarse;
    vam::BoundarySampler sampler(dom, opts);

    bool canonical = dom.kind() != vam::DomainKind::generic2d;
    bool want_sup = a.method == "sup";
    if (a.method != "auto" && a.method != "closed" && a.method != "sup")
        throw UsageError("--method must be auto, closed or sup");

    vam::MetricValue mv{0.0, vam::MetricId::v};
    std::string method = "closed_form";
    bool warning = false;

    auto eval_v = [&]() {
        if (canonical && !want_sup) return vam::v_closed(dom, x, y);
        method = "sup_sampling";
        return vam::v_sup(sampler, x, y);
    };

    if (a.metric == "v") {
        mv = eval_v();
        warning = sampler.pseudometric_warning_v();
    } else if (a.metric == "v_star") {
        mv = vam::starred(eval_v());
        warning = sampler.pseudometric_warning_v();
    } else if (a.metric == "vbar") {
        mv = vam::v_double(sampler, x, y);
        method = "sup_sampling";
        warning = sampler.pseudometric_warning_vbar();
    } else if (a.metric == "vbar_star") {
        mv = vam::starred(vam::v_double(sampler, x, y));
        method = "sup_sampling";
        warning = sampler.pseudometric_warning_vbar();
    } else if (a.metric == "s") {
        mv = vam::s_triangular(sampler, x, y);
        method = "sup_sampling";
    } else if (a.metric == "r") {
        mv = vam::r_ptolemaic(sampler, x, y);
        method = "sup_sampling";
    } else if (a.metric == "j") {
        mv = vam::j_metric(dom, x, y);
    } else if (a.metric == "k") {
        if (dom.kind() != vam::DomainKind::punctured_space)
            vam::fail(vam::errc::unsupported_domain, "the quasihyperbolic closed form covers the punctured space only");
        mv = vam::k_punctured(x, y);
    } else if (a.metric == "rho") {
        if (dom.kind() == vam::DomainKind::unit_ball) mv = vam::rho_ball(x, y);
        else if (dom.kind() == vam::DomainKind::half_space) mv = vam::rho_half(x, y);
        else vam::fail(vam::errc::unsupported_domain, "rho needs the unit ball or the half-space");
    } else if (a.metric == "rho_star") {
        mv = vam::rho_star(dom, x, y);
    } else {
        throw UsageError("unknown metric '" + a.metric + "'");
    }

    json out{{"metric", a.metric},
             {"value", mv.value},
             {"method", method},
             {"pseudometric_warning", warning}};
    std::cout << out.dump() << "\n";
    return exit_ok;
}

struct VerifyArgs {
    std::string suite, format = "json";
    long trials = 10000;
    std::uint64_t seed = 42;
    int n = 2;
    double a = 0.999;
    std::string abcd = "1,1,1,2";
};

int run_verify(const VerifyArgs& va) {
    using namespace vam;
    VerificationReport rep;
    if (va.suite == "bounds-ball") rep = bounds_suite(DomainSpec::unit_ball(va.n), va.trials, va.seed);
    else if (va.suite == "bounds-half") rep = bounds_suite(DomainSpec::half_space(va.n), va.trials, va.seed);
    else if (va.suite == "equality-ball") rep = equality_suite(DomainSpec::unit_ball(2), va.trials, va.seed);
    else if (va.suite == "equality-half") rep = equality_suite(DomainSpec::half_space(2), va.trials, va.seed);
    else if (va.suite == "lipschitz-ball") rep = lipschitz_ball_suite(va.a, va.trials, va.seed);
    else if (va.suite == "lipschitz-half") {
        auto c = parse_coords(va.abcd);
        if (c.size() != 4) throw UsageError("--abcd needs four comma-separated numbers");
        rep = lipschitz_half_suite(c[0], c[1], c[2], c[3], va.trials, va.seed);
    } else if (va.suite == "lipschitz-affine") rep = lipschitz_affine_suite(va.trials, va.seed);
    else if (va.suite == "lipschitz-cayley") {
        rep = lipschitz_ratio(cayley_half_to_ball(), DomainSpec::half_space(2), DomainSpec::unit_ball(2),
                              va.trials, va.seed);
        rep.suite_id = "lipschitz-cayley";
        rep.seed = va.seed;
    } else if (va.suite == "extremal-ball") rep = extremal_config_suite(DomainSpec::unit_ball(2), va.trials, va.seed);
    else if (va.suite == "extremal-half") rep = extremal_config_suite(DomainSpec::half_space(2), va.trials, va.seed);
    else if (va.suite == "punctured") rep = punctured_suite(va.trials, va.seed);
    else throw UsageError("unknown suite '" + va.suite + "'");

    print_report(rep, va.format);
    return rep.violations > 0 ? exit_violation : exit_ok;
}

struct SweepArgs {
    std::string family, grid, format = "csv";
};

int run_sweep(const SweepArgs& sa) {
    using vam::SweepFamily;
    SweepFamily fam;
    if (sa.family == "thm1_1_ball") fam = SweepFamily::ball_boundary_pair;
    else if (sa.family == "thm1_1_half") fam = SweepFamily::half_boundary_pair;
    else if (sa.family == "thm1_3_upper") fam = SweepFamily::half_to_ball_upper;
    else if (sa.family == "thm1_3_lower") fam = SweepFamily::half_to_ball_lower;
    else if (sa.family == "thm1_4_case2") fam = SweepFamily::half_inversion;
    else throw UsageError("unknown sweep family '" + sa.family + "'");

    auto parts = sa.grid;
    for (auto& c : parts)
        if (c == ':') c = ',';
    auto nums = parse_coords(parts);
    if (nums.size() != 3) throw UsageError("--grid needs start:stop:count");
    long count = std::lround(nums[2]);
    if (count < 1) throw UsageError("--grid count must be positive");
    std::vector<double> grid;
    for (long i = 0; i < count; ++i)
        grid.push_back(count == 1 ? nums[0] : nums[0] + (nums[1] - nums[0]) * double(i) / double(count - 1));

    vam::VerificationReport rep;
    try {
        rep = vam::sharpness_sweep(fam, grid);
    } catch (const vam::error& e) {
        if (e.code() == vam::errc::invalid_parameter) throw UsageError(e.what());
        throw;
    }

    if (sa.format == "json") {
        std::cout << report_to_json(rep).dump() << "\n";
    } else {
        std::cout << "param,ratio\n";
        for (const auto& row : rep.sweep)
            std::cout << format_double(row.param) << "," << format_double(row.value) << "\n";
    }
    return rep.violations > 0 ? exit_violation : exit_ok;
}

struct ConstantArgs {
    std::string domain;
    long trials = 100000;
    std::uint64_t seed = 42;
    int refine_iters = 400;
    std::string format = "json";
};

int run_constant(const ConstantArgs& ca) {
    vam::DomainSpec dom = ca.domain == "ball" ? vam::DomainSpec::unit_ball(2)
                        : ca.domain == "half" ? vam::DomainSpec::half_space(2)
                        : throw UsageError("constant domain must be ball or half");
    auto rep = vam::conjecture_constant(dom, ca.trials, ca.seed, ca.refine_iters);
    print_report(rep, ca.format);
    return exit_ok; // informational estimator
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"visual angle metric toolkit"};
    app.require_subcommand(1);

    DistArgs da;
    auto* dist = app.add_subcommand("dist", "evaluate a metric between two points");
    dist->add_option("--metric", da.metric, "one of v, vbar, s, r, j, k, rho, rho_star, v_star, vbar_star")->required();
    dist->add_option("--domain", da.domain, "ball | halfspace | punctured | path to a domain JSON file")->required();
    dist->add_option("--x", da.xs, "comma-separated coordinates")->required();
    dist->add_option("--y", da.ys, "comma-separated coordinates")->required();
    dist->add_option("--n", da.n, "expected dimension (checked against the coordinates)");
    dist->add_option("--method", da.method, "auto | closed | sup");
    dist->add_option("--coarse", da.coarse, "boundary sample count for sup evaluation");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", va.suite, "suite id")->required();
    verify->add_option("--trials", va.trials);
    verify->add_option("--seed", va.seed);
    verify->add_option("--n", va.n, "dimension for the bounds suites (2 or 3)");
    verify->add_option("--a", va.a, "base point norm for lipschitz-ball");
    verify->add_option("--abcd", va.abcd, "coefficients for lipschitz-half");
    verify->add_option("--format", va.format, "json | csv");

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "evaluate a sharpness family over a parameter grid");
    sweep->add_option("family", sa.family, "sweep id")->required();
    sweep->add_option("--grid", sa.grid, "start:stop:count")->required();
    sweep->add_option("--format", sa.format, "csv | json");

    ConstantArgs ca;
    auto* constant = app.add_subcommand("constant", "estimate sup v / j over a canonical domain");
    constant->add_option("domain", ca.domain, "ball | half")->required();
    constant->add_option("--trials", ca.trials);
    constant->add_option("--seed", ca.seed);
    constant->add_option("--refine-iters", ca.refine_iters);
    constant->add_option("--format", ca.format, "json | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        print_error("usage", e.what());
        return exit_usage;
    }

    try {
        if (dist->parsed()) return run_dist(da);
        if (verify->parsed()) return run_verify(va);
        if (sweep->parsed()) return run_sweep(sa);
        if (constant->parsed()) return run_constant(ca);
    } catch (const UsageError& e) {
        print_error("usage", e.what());
        return exit_usage;
    } catch (const vam::error& e) {
        print_error(vam::errc_name(e.code()), e.what());
        return exit_domain;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return exit_domain;
    }
    return exit_usage;
}
