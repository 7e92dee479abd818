#include "fracmom/cli.hpp"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "fracmom/csv.hpp"
#include "fracmom/errors.hpp"
#include "fracmom/identities.hpp"
#include "fracmom/reconstruct.hpp"

namespace fracmom::cli {

namespace {

using json = nlohmann::json;

const std::map<std::string, Command> kCommands = {
    {"moments", Command::moments},   {"reconstruct-cf", Command::reconstruct_cf},
    {"reconstruct-pdf", Command::reconstruct_pdf}, {"verify", Command::verify},
    {"strip", Command::strip},       {"figures", Command::figures},
};

const char* kFigureTable = R"(Figure table used by `figures` (rho = 0.4, delta = 0.4 unless noted):
  fig3a  uniform a=2         classical Taylor CF, order 8     theta in [0.1, 10]
  fig3b  uniform a=2         CF series, m=25                  theta in [0.1, 20]
  fig4   rayleigh sigma=2    CF series, m=25 (re 4a, im 4b)   theta in [0.1, 10]
  fig5   cauchy              CF series, m=25                  theta in [0.1, 10]
  fig6   levy                CF series, rho=0.9, m=25 (6a/6b) theta in [0.1, 10]
  fig7   gaussian mu=2 s=1   PDF series, m=29 (30 moments)    x in [-2, 6], |x| >= 0.1
  fig8   cauchy              PDF series, m=9 (10 moments)     x in [-10, 10], |x| >= 0.1
  fig9   levy                PDF series, m=9 (10 moments)     x in [0.1, 10]
)";

std::string command_name(Command c) {
    for (const auto& [name, cmd] : kCommands)
        if (cmd == c) return name;
    return "?";
}

std::string method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed";
        case Method::quadrature: return "quad";
        case Method::monte_carlo: return "mc";
    }
    return "?";
}

Method parse_method(const std::string& s) {
    if (s == "closed") return Method::closed_form;
    if (s == "quad") return Method::quadrature;
    if (s == "mc") return Method::monte_carlo;
    throw ArgumentError("method must be closed, quad or mc, got '" + s + "'");
}

double require_number(const json& v, const std::string& key) {
    if (!v.is_number()) throw ArgumentError("distribution parameter '" + key + "' must be a number");
    return v.get<double>();
}

DistributionSpec build_spec(Family family, const std::map<std::string, double>& params) {
    std::vector<std::string> allowed;
    switch (family) {
        case Family::uniform: allowed = {"a"}; break;
        case Family::rayleigh: allowed = {"sigma"}; break;
        case Family::gaussian: allowed = {"mu", "sigma"}; break;
        default: break;
    }
    for (const auto& [k, v] : params)
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw ArgumentError("unknown parameter '" + k + "' for the " + std::string(family_name(family)) +
                                " family");
    for (const auto& k : allowed)
        if (!params.count(k))
            throw ArgumentError("the " + std::string(family_name(family)) + " family needs parameter '" + k + "'");
    switch (family) {
        case Family::uniform: return DistributionSpec::uniform(params.at("a"));
        case Family::rayleigh: return DistributionSpec::rayleigh(params.at("sigma"));
        case Family::gaussian: return DistributionSpec::gaussian(params.at("mu"), params.at("sigma"));
        case Family::cauchy: return DistributionSpec::cauchy();
        case Family::levy: return DistributionSpec::levy();
    }
    throw ArgumentError("unsupported family");
}

io::Metadata grid_metadata(const DistributionSpec& spec, const RunConfig& cfg) {
    io::Metadata meta;
    meta.emplace_back("family", std::string(family_name(spec.family)));
    std::string params;
    for (const auto& kv : distribution_params(spec)) params += (params.empty() ? "" : " ") + kv;
    meta.emplace_back("params", params);
    meta.emplace_back("method", method_name(cfg.method));
    if (cfg.method == Method::monte_carlo) {
        meta.emplace_back("n_samples", std::to_string(cfg.mc.n_samples));
        meta.emplace_back("seed", std::to_string(cfg.mc.seed));
    }
    return meta;
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
    } else {
        io::write_file_atomic(path, content);
    }
}

const DistributionSpec& require_dist(const RunConfig& cfg) {
    if (!cfg.dist) throw ArgumentError(command_name(cfg.command) + " needs a distribution (--dist or --family)");
    return *cfg.dist;
}

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto logger = std::make_shared<spdlog::logger>("fracmom", sink);
    logger->set_pattern("[%l] %v");
    spdlog::level::level_enum level = spdlog::level::warn;
    if (const char* env = std::getenv("FRACMOM_LOG")) {
        std::string v = env;
        if (v == "error") level = spdlog::level::err;
        else if (v == "warn") level = spdlog::level::warn;
        else if (v == "info") level = spdlog::level::info;
        else if (v == "debug") level = spdlog::level::debug;
        else logger->warn("ignoring FRACMOM_LOG={} (expected error, warn, info or debug)", v);
    }
    logger->set_level(level);
    return logger;
}

struct Context {
    const RunConfig& cfg;
    std::ostream& out;
    std::ostream& err;
    std::shared_ptr<spdlog::logger> log;
    std::string operation;
};

std::ostream& summary_stream(Context& ctx) { return ctx.cfg.out.empty() ? ctx.err : ctx.out; }

int cmd_moments(Context& ctx) {
    const auto& spec = require_dist(ctx.cfg);
    ctx.operation = "make_grid";
    ctx.log->info("building {} grid for {} (rho={}, delta={}, m={})", method_name(ctx.cfg.method), spec.describe(),
                  ctx.cfg.grid.rho, ctx.cfg.grid.delta, ctx.cfg.grid.m);
    MomentGrid grid = make_grid(spec, ctx.cfg.grid, ctx.cfg.method, ctx.cfg.mc);
    std::ostringstream os;
    io::write_grid_csv(os, grid, grid_metadata(spec, ctx.cfg));
    emit(ctx.cfg.out, os.str(), ctx.out);
    if (!ctx.cfg.out.empty()) ctx.out << "wrote " << grid.size() << " moments to " << ctx.cfg.out << '\n';
    return 0;
}

int cmd_reconstruct(Context& ctx, CurveKind kind) {
    MomentGrid grid;
    io::Metadata meta;
    std::optional<DistributionSpec> spec = ctx.cfg.dist;
    if (!ctx.cfg.grid_in.empty()) {
        ctx.operation = "read_grid";
        std::ifstream is(ctx.cfg.grid_in);
        if (!is) throw ArgumentError("cannot open moment grid " + ctx.cfg.grid_in);
        io::GridFile file = io::read_grid_csv(is);
        grid = file.grid;
        meta = file.meta;
        if (!spec) {
            const std::string* fam = file.find("family");
            const std::string* params = file.find("params");
            if (fam) spec = distribution_from_params(*fam, params ? split_words(*params) : std::vector<std::string>{});
        }
    } else {
        const auto& s = require_dist(ctx.cfg);
        ctx.operation = "make_grid";
        grid = make_grid(s, ctx.cfg.grid, ctx.cfg.method, ctx.cfg.mc);
        meta = grid_metadata(s, ctx.cfg);
    }
    Range range = ctx.cfg.range.value_or(kind == CurveKind::cf ? Range{0.1, 20.0, 200} : Range{-10.0, 10.0, 200});
    std::vector<double> xs = expand_range(range);
    ctx.operation = kind == CurveKind::cf ? "cf_series" : "pdf_series";
    CurveResult curve = sample_curve(grid, kind, xs, spec ? &*spec : nullptr);
    std::ostringstream os;
    io::write_curve_csv(os, curve, meta);
    emit(ctx.cfg.out, os.str(), ctx.out);
    std::ostream& s = summary_stream(ctx);
    s << (kind == CurveKind::cf ? "cf" : "pdf") << " reconstruction: " << xs.size() << " points, m=" << grid.params.m;
    if (curve.abs_err) s << ", max abs error " << curve.max_abs_err();
    s << '\n';
    return 0;
}

int cmd_verify(Context& ctx) {
    const auto& spec = require_dist(ctx.cfg);
    ctx.operation = "identity_suite";
    int m = std::min(ctx.cfg.grid.m, 5);
    auto rows = identity_suite(spec, ctx.cfg.grid.rho, ctx.cfg.grid.delta, m);
    auto& os = ctx.out;
    os << "identity checks for " << spec.describe() << " (rho=" << ctx.cfg.grid.rho
       << ", delta=" << ctx.cfg.grid.delta << ", m=" << m << ")\n";
    os << std::left << std::setw(18) << "identity" << std::setw(7) << "side" << std::setw(16) << "gamma"
       << std::setw(14) << "rel_dev" << "status\n";
    double worst = 0.0;
    int passed = 0;
    for (const auto& r : rows) {
        std::ostringstream g;
        g << r.gamma.real() << (r.gamma.imag() < 0 ? "-" : "+") << std::abs(r.gamma.imag()) << "i";
        os << std::left << std::setw(18) << r.identity << std::setw(7) << r.side << std::setw(16) << g.str()
           << std::setw(14) << std::setprecision(3) << std::scientific << r.rel_deviation << std::defaultfloat
           << (r.passed ? "pass" : "FAIL");
        if (!r.error.empty()) os << "  (" << r.error << ")";
        os << '\n';
        worst = std::max(worst, r.rel_deviation);
        passed += r.passed;
    }
    os << passed << "/" << rows.size() << " checks passed, max relative deviation " << worst << '\n';
    return passed == int(rows.size()) ? 0 : 2;
}

int cmd_strip(Context& ctx) {
    const auto& spec = require_dist(ctx.cfg);
    ctx.operation = "working_strip";
    FundamentalStrip s = working_strip(spec);
    ctx.out << s.to_string() << '\n';
    ctx.log->info("moment strip of {}: {}", spec.describe(), spec.moment_strip.to_string());
    return 0;
}

struct FigureSpec {
    std::string name;
    DistributionSpec dist;
    CurveKind kind;
    GridParams grid;
    Range range;
};

int cmd_figures(Context& ctx) {
    namespace fs = std::filesystem;
    fs::path dir = ctx.cfg.out.empty() ? fs::path("figures") : fs::path(ctx.cfg.out);
    fs::create_directories(dir);
    std::vector<FigureSpec> figs = {
        {"fig3b_uniform_cf", DistributionSpec::uniform(2.0), CurveKind::cf, {0.4, 0.4, 25, Sign::minus}, {0.1, 20.0, 400}},
        {"fig4_rayleigh_cf", DistributionSpec::rayleigh(2.0), CurveKind::cf, {0.4, 0.4, 25, Sign::minus}, {0.1, 10.0, 200}},
        {"fig5_cauchy_cf", DistributionSpec::cauchy(), CurveKind::cf, {0.4, 0.4, 25, Sign::minus}, {0.1, 10.0, 200}},
        {"fig6_levy_cf", DistributionSpec::levy(), CurveKind::cf, {0.9, 0.4, 25, Sign::minus}, {0.1, 10.0, 200}},
        {"fig7_gaussian_pdf", DistributionSpec::gaussian(2.0, 1.0), CurveKind::pdf, {0.4, 0.4, 29, Sign::minus}, {-2.0, 6.0, 161}},
        {"fig8_cauchy_pdf", DistributionSpec::cauchy(), CurveKind::pdf, {0.4, 0.4, 9, Sign::minus}, {-10.0, 10.0, 401}},
        {"fig9_levy_pdf", DistributionSpec::levy(), CurveKind::pdf, {0.4, 0.4, 9, Sign::minus}, {0.1, 10.0, 200}},
    };
    RunConfig meta_cfg = ctx.cfg;
    meta_cfg.method = Method::closed_form;

    {
        ctx.operation = "classical_taylor_cf";
        auto spec = DistributionSpec::uniform(2.0);
        CurveResult curve;
        curve.kind = CurveKind::cf;
        curve.params = {0.4, 0.4, 8, Sign::minus};
        curve.abscissae = expand_range({0.1, 10.0, 200});
        std::vector<Complex> exact;
        std::vector<double> err;
        for (double t : curve.abscissae) {
            curve.values.push_back(classical_taylor_cf(spec, t, 8));
            exact.push_back(exact_cf(spec, t));
            err.push_back(std::abs(curve.values.back() - exact.back()));
        }
        curve.exact = exact;
        curve.abs_err = err;
        io::Metadata meta = grid_metadata(spec, meta_cfg);
        meta.back().second = "taylor order 8";
        std::ostringstream os;
        io::write_curve_csv(os, curve, meta);
        io::write_file_atomic(dir / "fig3a_uniform_taylor.csv", os.str());
        ctx.out << std::left << std::setw(22) << "fig3a_uniform_taylor" << " max abs error " << curve.max_abs_err()
                << '\n';
    }
    for (const auto& f : figs) {
        ctx.operation = "figure " + f.name;
        ctx.log->info("computing {}", f.name);
        MomentGrid grid = make_grid(f.dist, f.grid, Method::closed_form);
        CurveResult curve = sample_curve(grid, f.kind, expand_range(f.range), &f.dist);
        std::ostringstream os;
        io::write_curve_csv(os, curve, grid_metadata(f.dist, meta_cfg));
        io::write_file_atomic(dir / (f.name + ".csv"), os.str());
        ctx.out << std::left << std::setw(22) << f.name << " max abs error " << curve.max_abs_err() << '\n';
    }
    ctx.out << "wrote 8 curve files to " << dir.string() << '\n';
    return 0;
}

}  // namespace

DistributionSpec distribution_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ArgumentError(std::string("distribution file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ArgumentError("distribution file must hold a JSON object");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "family" && it.key() != "params")
            throw ArgumentError("unknown key '" + it.key() + "' in distribution file");
    if (!doc.contains("family") || !doc["family"].is_string())
        throw ArgumentError("distribution file needs a string field 'family'");
    std::map<std::string, double> params;
    if (doc.contains("params")) {
        if (!doc["params"].is_object()) throw ArgumentError("'params' must be an object");
        for (auto it = doc["params"].begin(); it != doc["params"].end(); ++it)
            params[it.key()] = require_number(it.value(), it.key());
    }
    return build_spec(parse_family(doc["family"].get<std::string>()), params);
}

DistributionSpec distribution_from_params(const std::string& family, const std::vector<std::string>& key_values) {
    std::map<std::string, double> params;
    for (const auto& kv : key_values) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw ArgumentError("--param expects key=value, got '" + kv + "'");
        std::string key = kv.substr(0, eq);
        if (params.count(key)) throw ArgumentError("parameter '" + key + "' given twice");
        params[key] = io::parse_double(kv.substr(eq + 1));
    }
    return build_spec(parse_family(family), params);
}

std::vector<std::string> distribution_params(const DistributionSpec& spec) {
    switch (spec.family) {
        case Family::uniform: return {"a=" + io::format_double(spec.scale)};
        case Family::rayleigh: return {"sigma=" + io::format_double(spec.scale)};
        case Family::gaussian:
            return {"mu=" + io::format_double(spec.location), "sigma=" + io::format_double(spec.scale)};
        default: return {};
    }
}

Range parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ':')) parts.push_back(cur);
    if (parts.size() != 3) throw ArgumentError("--range expects lo:hi:count, got '" + text + "'");
    Range r{io::parse_double(parts[0]), io::parse_double(parts[1]), 0};
    double count = io::parse_double(parts[2]);
    if (count != std::floor(count) || count < 2 || count > 1e7)
        throw ArgumentError("--range count must be an integer >= 2");
    r.count = static_cast<int>(count);
    if (!(r.lo < r.hi)) throw ArgumentError("--range needs lo < hi");
    return r;
}

std::vector<double> expand_range(const Range& range, double min_abs) {
    auto linspace = [](double a, double b, int n, std::vector<double>& out) {
        for (int i = 0; i < n; ++i) out.push_back(i == n - 1 ? b : a + (b - a) * i / (n - 1));
    };
    std::vector<double> out;
    if (range.lo > 0.0 || range.hi < 0.0) {
        linspace(range.lo, range.hi, range.count, out);
        return out;
    }
    double neg = range.lo <= -min_abs ? -min_abs - range.lo : 0.0;
    double pos = range.hi >= min_abs ? range.hi - min_abs : 0.0;
    if (neg + pos <= 0.0 && range.lo > -min_abs && range.hi < min_abs)
        throw ArgumentError("range lies entirely inside the excluded band |x| < " + io::format_double(min_abs));
    int n_neg = 0;
    int n_pos = 0;
    if (range.lo <= -min_abs && range.hi >= min_abs) {
        n_neg = std::max(2, static_cast<int>(std::lround(range.count * neg / (neg + pos))));
        n_pos = std::max(2, range.count - n_neg);
    } else if (range.lo <= -min_abs) {
        n_neg = range.count;
    } else {
        n_pos = range.count;
    }
    if (n_neg) linspace(range.lo, -min_abs, n_neg, out);
    if (n_pos) linspace(min_abs, range.hi, n_pos, out);
    return out;
}

namespace {

struct Parsed {
    RunConfig cfg;
    bool help = false;
    std::string help_text;
};

Parsed parse_impl(const std::vector<std::string>& args) {
    Parsed p;
    RunConfig& cfg = p.cfg;
    CLI::App app{"fracmom: complex fractional moments and Mellin-line reconstruction of CFs and PDFs", "fracmom"};
    app.footer(kFigureTable);
    std::string command, dist_path, family, sign = "minus", method = "closed", range;
    std::vector<std::string> params;
    std::vector<std::string> names;
    for (const auto& [n, c] : kCommands) names.push_back(n);
    app.add_option("command", command, "moments | reconstruct-cf | reconstruct-pdf | verify | strip | figures")
        ->required()
        ->check(CLI::IsMember(names));
    app.add_option("--dist", dist_path, "distribution JSON file");
    app.add_option("--family", family, "uniform | rayleigh | cauchy | levy | gaussian");
    app.add_option("--param", params, "family parameter as key=value (repeatable)");
    app.add_option("--rho", cfg.grid.rho, "line abscissa rho")->capture_default_str();
    app.add_option("--delta", cfg.grid.delta, "step along the imaginary axis")->capture_default_str();
    app.add_option("--m", cfg.grid.m, "grid half-width (2m+1 moments)")->capture_default_str();
    app.add_option("--sign", sign, "plus: E[(iX)^-g], minus: E[(-iX)^-g]")->capture_default_str();
    app.add_option("--method", method, "closed | quad | mc")->capture_default_str();
    app.add_option("--n-samples", cfg.mc.n_samples, "Monte Carlo sample count")->capture_default_str();
    app.add_option("--seed", cfg.mc.seed, "Monte Carlo seed")->capture_default_str();
    app.add_option("--range", range, "abscissae lo:hi:count");
    app.add_option("--out", cfg.out, "output CSV (directory for figures)");
    app.add_option("--grid-in", cfg.grid_in, "read the moment grid from this CSV");
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        p.help = true;
        p.help_text = app.help();
        return p;
    } catch (const CLI::ParseError& e) {
        throw ArgumentError(e.what());
    }
    cfg.command = kCommands.at(command);
    if (!dist_path.empty() && !family.empty()) throw ArgumentError("use either --dist or --family, not both");
    if (!params.empty() && family.empty()) throw ArgumentError("--param needs --family");
    if (!dist_path.empty()) {
        std::ifstream is(dist_path);
        if (!is) throw ArgumentError("cannot open distribution file " + dist_path);
        std::stringstream ss;
        ss << is.rdbuf();
        cfg.dist = distribution_from_json(ss.str());
    } else if (!family.empty()) {
        cfg.dist = distribution_from_params(family, params);
    }
    cfg.grid.sign = io::parse_sign(sign);
    cfg.method = parse_method(method);
    if (!range.empty()) cfg.range = parse_range(range);
    cfg.grid.validate();
    if (cfg.method == Method::monte_carlo && cfg.mc.n_samples == 0) throw ArgumentError("--n-samples must be >= 1");
    return p;
}

}  // namespace

std::string help_text() { return parse_impl({"--help"}).help_text; }

RunConfig parse_args(const std::vector<std::string>& args) {
    Parsed p = parse_impl(args);
    if (p.help) throw ArgumentError("help requested");
    return p.cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Context ctx{config, out, err, make_logger(err), command_name(config.command)};
    try {
        switch (config.command) {
            case Command::moments: return cmd_moments(ctx);
            case Command::reconstruct_cf: return cmd_reconstruct(ctx, CurveKind::cf);
            case Command::reconstruct_pdf: return cmd_reconstruct(ctx, CurveKind::pdf);
            case Command::verify: return cmd_verify(ctx);
            case Command::strip: return cmd_strip(ctx);
            case Command::figures: return cmd_figures(ctx);
        }
    } catch (const QuadratureError& e) {
        err << "error: numerical failure in " << ctx.operation << ": " << e.what() << '\n';
        return 2;
    } catch (const PoleError& e) {
        err << "error: numerical failure in " << ctx.operation << ": " << e.what() << '\n';
        return 2;
    } catch (const AllSamplesDegenerateError& e) {
        err << "error: numerical failure in " << ctx.operation << ": " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << ctx.operation << ": " << e.what() << '\n';
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Parsed p;
    try {
        p = parse_impl(args);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return 1;
    }
    if (p.help) {
        out << p.help_text;
        return 0;
    }
    return run(p.cfg, out, err);
}

}  // namespace fracmom::cli
