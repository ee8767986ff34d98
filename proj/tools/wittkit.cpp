// Command-line front end: exact computations in the not-finitely graded
// Lie algebra W(Gamma), its central extension, ideals, derivations,
// automorphisms and 2-cocycles. Every check is exact; exit code 0 means
// success, 1 a failed verification, 2 bad input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wittkit/json_io.hpp"
#include "wittkit/parser.hpp"

using namespace wittkit;

namespace {

std::string g_command_echo;

struct Options {
    std::string gamma_file;
    std::string input_file;
    std::string expr, x_expr, y_expr, gen_expr;
    std::string rule_name = "wgamma";
    std::vector<int> window;  // A I
    int steps = 5;
    long order = -1;  // decompose truncation order; default window-derived
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GammaConfig load_gamma(const Options& opt) {
    std::string path = opt.gamma_file;
    if (path.empty()) {
        const char* env = std::getenv("WITTKIT_GAMMA");
        if (env) path = env;
    }
    if (path.empty())
        throw InvalidConfig("no gamma configuration: pass --gamma FILE or set WITTKIT_GAMMA");
    return GammaConfig::from_json_text(read_file(path));
}

Window get_window(const Options& opt) {
    if (opt.window.size() != 2) throw Error("this command needs --window A I");
    if (opt.window[0] <= 0 || opt.window[1] < 0)
        throw Error("window bounds must satisfy A >= 1, I >= 0");
    return Window{opt.window[0], opt.window[1]};
}

// Verification failures are reported in-band and drive the exit code;
// they are not input errors.
bool is_verification_error(const Error& e) {
    return dynamic_cast<const NotADerivation*>(&e) || dynamic_cast<const NotACocycle*>(&e) ||
           dynamic_cast<const InconsistentC*>(&e) ||
           dynamic_cast<const InconsistentAdditivity*>(&e);
}

int emit(const std::string& subcommand, const GammaConfig* config, Json result,
         const std::string& status, std::chrono::steady_clock::time_point start) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    Json report{{"schema", 1},
                {"command", g_command_echo.empty() ? subcommand : g_command_echo},
                {"subcommand", subcommand},
                {"gamma", config ? Json(config->fingerprint()) : Json(nullptr)},
                {"status", status},
                {"result", std::move(result)},
                {"timing_ms", elapsed}};
    std::cout << report.dump(2) << "\n";
    if (status == "ok") return 0;
    return status == "verification_failed" ? 1 : 2;
}

int run_eval(const Options& opt, std::chrono::steady_clock::time_point start) {
    GammaConfig config = load_gamma(opt);
    BracketRule rule = BracketRule::from_name(opt.rule_name);
    Element e = eval(config, *parse(config, opt.expr), rule);
    Json result{{"element", element_to_json(config, e)}, {"pretty", e.to_string(config)}};
    return emit("eval", &config, std::move(result), "ok", start);
}

int run_jacobi(const Options& opt, std::chrono::steady_clock::time_point start) {
    GammaConfig config = load_gamma(opt);
    BracketRule rule = BracketRule::from_name(opt.rule_name);
    Window window = get_window(opt);
    int lo = 0, hi = window.level_bound;
    if (rule.kind == BracketKind::Subquotient) {
        lo = rule.m;
        hi = std::min(hi, rule.n);
    }
    std::vector<BasisIndex> basis;
    for (const auto& d : window.degrees(config))
        for (int i = lo; i <= hi; ++i) basis.push_back({d, i});
    long checked = 0, failing = 0;
    Element worst;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            for (size_t k = j + 1; k < basis.size(); ++k) {
                Element r = jacobi_residual(
                    config, Element::basis(config, basis[i].degree, basis[i].level),
                    Element::basis(config, basis[j].degree, basis[j].level),
                    Element::basis(config, basis[k].degree, basis[k].level), rule);
                ++checked;
                if (!r.is_zero()) {
                    ++failing;
                    if (r.term_count() > worst.term_count()) worst = r;
                }
            }
    Json result{{"rule", rule.name()},
                {"triples_checked", checked},
                {"failing_triples", failing},
                {"max_residual", element_to_json(config, worst)}};
    return emit("jacobi", &config, std::move(result),
                failing == 0 ? "ok" : "verification_failed", start);
}

int run_ideal(const Options& opt, std::chrono::steady_clock::time_point start) {
    GammaConfig config = load_gamma(opt);
    Window window = get_window(opt);
    Element gen = eval(config, *parse(config, opt.gen_expr), BracketRule::wgamma());
    IdealReport report = ideal_generated(config, gen, window);
    replay_witness(config, gen, report.witness_chain);
    return emit("ideal", &config, ideal_report_to_json(config, report),
                report.coverage_verified ? "ok" : "verification_failed", start);
}

int run_adprobe(const Options& opt, std::chrono::steady_clock::time_point start) {
    GammaConfig config = load_gamma(opt);
    BracketRule rule = BracketRule::from_name(opt.rule_name);
    Element x = eval(config, *parse(config, opt.x_expr), rule);
    Element y = eval(config, *parse(config, opt.y_expr), rule);
    if (opt.steps < 1) throw Error("--steps must be at least 1");
    AdProbeResult probe = ad_probe(config, x, y, opt.steps, rule);
    bool ok = true;
    for (const auto& ht : probe.highest_terms) ok = ok && ht.matches;
    return emit("adprobe", &config, ad_probe_to_json(config, probe),
                ok ? "ok" : "verification_failed", start);
}

int run_derive(const Options& opt, bool decompose,
               std::chrono::steady_clock::time_point start) {
    GammaConfig config = load_gamma(opt);
    Window window = get_window(opt);
    DerivationSpec spec = derivation_from_json(config, Json::parse(read_file(opt.input_file)));
    if (!decompose) {
        LeibnizReport report = leibniz_check(config, spec, window);
        return emit("derive check", &config, leibniz_report_to_json(config, report),
                    report.ok() ? "ok" : "verification_failed", start);
    }
    long order = opt.order > 0 ? opt.order : window.level_bound + 4;
    DecompositionResult res = decompose_derivation(config, spec, window, order);
    return emit("derive decompose", &config, decomposition_to_json(config, res),
                res.ok() ? "ok" : "verification_failed", start);
}

int run_aut(const Options& opt, const std::string& sub,
            std::chrono::steady_clock::time_point start) {
    GammaConfig config = load_gamma(opt);
    Json input = Json::parse(read_file(opt.input_file));
    if (sub == "apply") {
        AutElement a = aut_from_json(config, input.at("aut"));
        Element x;
        if (input.contains("expr"))
            x = eval(config, *parse(config, input.at("expr").get<std::string>()),
                     BracketRule::wgamma());
        else
            x = element_from_json(config, input.at("element"));
        Element img = aut_apply(config, a, x);
        Json result{{"element", element_to_json(config, img)},
                    {"pretty", img.to_string(config)}};
        return emit("aut apply", &config, std::move(result), "ok", start);
    }
    if (sub == "compose") {
        AutElement a1 = aut_from_json(config, input.at("a1"));
        AutElement a2 = aut_from_json(config, input.at("a2"));
        return emit("aut compose", &config, aut_to_json(config, aut_compose(config, a1, a2)),
                    "ok", start);
    }
    if (sub == "invert") {
        AutElement a = aut_from_json(config, input.at("aut"));
        return emit("aut invert", &config, aut_to_json(config, aut_invert(config, a)), "ok",
                    start);
    }
    AutElement a = aut_from_json(config, input.at("aut"));
    Window window = get_window(opt);
    AutVerifyReport report = aut_verify(config, a, window);
    return emit("aut verify", &config, aut_verify_report_to_json(config, report),
                report.ok() ? "ok" : "verification_failed", start);
}

int run_cocycle(const Options& opt, const std::string& sub,
                std::chrono::steady_clock::time_point start) {
    GammaConfig config = load_gamma(opt);
    Window window = get_window(opt);
    Cocycle psi = cocycle_from_json(config, Json::parse(read_file(opt.input_file)));
    if (sub == "check") {
        CocycleCheckReport report = cocycle_condition_check(config, psi, window);
        return emit("cocycle check", &config, cocycle_check_report_to_json(config, report),
                    report.ok() ? "ok" : "verification_failed", start);
    }
    if (sub == "normalize") {
        NormalizationResult res = normalize_cocycle(config, psi, window);
        return emit("cocycle normalize", &config, normalization_to_json(config, res),
                    res.ok() ? "ok" : "verification_failed", start);
    }
    // fit: feasible and infeasible are both ordinary answers
    CoboundaryFitResult res = coboundary_fit(config, psi, window);
    return emit("cocycle fit", &config, coboundary_fit_to_json(config, res), "ok", start);
}

}  // namespace

int main(int argc, char** argv) {
    auto start = std::chrono::steady_clock::now();
    {
        std::ostringstream echo;
        for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];
        g_command_echo = echo.str();
    }
    Options opt;
    CLI::App app{"exact computations in the not-finitely graded Lie algebra W(Gamma)"};
    app.require_subcommand(1);
    app.add_option("--gamma", opt.gamma_file, "gamma configuration JSON (or WITTKIT_GAMMA)");

    auto add_window = [&](CLI::App* cmd) {
        cmd->add_option("--window", opt.window, "window bounds: degree A, level I")->expected(2);
    };

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a DSL expression");
    eval_cmd->add_option("expr", opt.expr, "expression")->required();
    eval_cmd->add_option("--rule", opt.rule_name, "bracket rule");

    auto* jacobi_cmd = app.add_subcommand("jacobi", "sweep the Jacobi identity on a window");
    add_window(jacobi_cmd);
    jacobi_cmd->add_option("--rule", opt.rule_name, "bracket rule");

    auto* ideal_cmd = app.add_subcommand("ideal", "classify the ideal generated by an element");
    ideal_cmd->add_option("--gen", opt.gen_expr, "generator expression")->required();
    add_window(ideal_cmd);

    auto* adprobe_cmd = app.add_subcommand("adprobe", "iterated ad ranks and highest terms");
    adprobe_cmd->add_option("--x", opt.x_expr, "acting element")->required();
    adprobe_cmd->add_option("--y", opt.y_expr, "probed element")->required();
    adprobe_cmd->add_option("--steps", opt.steps, "number of ad applications");
    adprobe_cmd->add_option("--rule", opt.rule_name, "bracket rule");

    auto* derive_cmd = app.add_subcommand("derive", "derivation checks");
    auto* derive_check = derive_cmd->add_subcommand("check", "Leibniz residuals");
    auto* derive_dec = derive_cmd->add_subcommand("decompose", "split into ad_y + D_phi");
    for (auto* c : {derive_check, derive_dec}) {
        c->add_option("--input", opt.input_file, "derivation JSON")->required();
        add_window(c);
    }
    derive_dec->add_option("--order", opt.order, "truncation order");
    derive_cmd->require_subcommand(1);

    auto* aut_cmd = app.add_subcommand("aut", "automorphism operations");
    for (const std::string name : {"apply", "compose", "verify", "invert"}) {
        auto* c = aut_cmd->add_subcommand(name, name + " an automorphism input");
        c->add_option("--input", opt.input_file, "input JSON")->required();
        if (name == "verify") add_window(c);
    }
    aut_cmd->require_subcommand(1);

    auto* coc_cmd = app.add_subcommand("cocycle", "2-cocycle operations");
    for (const std::string name : {"check", "normalize", "fit"}) {
        auto* c = coc_cmd->add_subcommand(name, name + " a cocycle input");
        c->add_option("--input", opt.input_file, "cocycle JSON")->required();
        add_window(c);
    }
    coc_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(opt, start);
        if (jacobi_cmd->parsed()) return run_jacobi(opt, start);
        if (ideal_cmd->parsed()) return run_ideal(opt, start);
        if (adprobe_cmd->parsed()) return run_adprobe(opt, start);
        if (derive_cmd->parsed())
            return run_derive(
                opt, derive_cmd->get_subcommands().front()->get_name() == "decompose", start);
        if (aut_cmd->parsed())
            return run_aut(opt, aut_cmd->get_subcommands().front()->get_name(), start);
        if (coc_cmd->parsed())
            return run_cocycle(opt, coc_cmd->get_subcommands().front()->get_name(), start);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const Error& e) {
        std::string status = is_verification_error(e) ? "verification_failed" : "error";
        Json report{{"schema", 1},
                    {"command", g_command_echo},
                    {"status", status},
                    {"error", e.what()}};
        std::cout << report.dump(2) << "\n";
        return status == "verification_failed" ? 1 : 2;
    } catch (const std::exception& e) {
        Json report{
            {"schema", 1}, {"command", g_command_echo}, {"status", "error"}, {"error", e.what()}};
        std::cout << report.dump(2) << "\n";
        return 2;
    }
}
