#include <mdx/mdx.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int exit_code(mdx_status st) {
    // Bad arguments are usage errors, same class as parse failures.
    return st == MDX_BAD_ARGUMENT ? 2 : static_cast<int>(st);
}

int run_eval(const std::string& path, const std::vector<std::string>& exprs) {
    std::string source;
    if (!exprs.empty()) {
        for (const auto& e : exprs) {
            source += e;
            source += '\n';
        }
    } else if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        source = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::fprintf(stderr, "cannot open %s\n", path.c_str());
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        source = buf.str();
    }
    mdx_session* session = mdx_session_new();
    if (session == nullptr) {
        std::fprintf(stderr, "cannot create session\n");
        return 3;
    }
    char* out = nullptr;
    mdx_status st = mdx_session_eval(session, source.c_str(), &out);
    if (out != nullptr && *out != '\0') {
        if (st == MDX_OK) {
            std::fputs(out, stdout);
        } else {
            std::fputs(out, stderr);
            std::fputc('\n', stderr);
        }
    }
    mdx_string_free(out);
    mdx_session_free(session);
    return exit_code(st);
}

int run_check(const std::string& suite, const mdx_suite_config& cfg, bool as_json) {
    char* report = nullptr;
    mdx_status st = mdx_run_suite(suite.c_str(), &cfg, as_json ? 1 : 0, &report);
    if (report != nullptr && *report != '\0') {
        std::string text(report);
        if (text.back() != '\n') text += '\n';
        std::fputs(text.c_str(), st == MDX_BAD_ARGUMENT ? stderr : stdout);
    }
    mdx_string_free(report);
    return exit_code(st);
}

int run_repl() {
    mdx_session* session = mdx_session_new();
    if (session == nullptr) {
        std::fprintf(stderr, "cannot create session\n");
        return 3;
    }
    std::string line;
    while (true) {
        std::fputs("mdx> ", stdout);
        std::fflush(stdout);
        if (!std::getline(std::cin, line)) {
            std::fputc('\n', stdout);
            break;
        }
        if (line == "exit" || line == "quit") break;
        if (line.empty()) continue;
        char* out = nullptr;
        mdx_status st = mdx_session_eval(session, line.c_str(), &out);
        if (out != nullptr && *out != '\0') {
            if (st == MDX_OK) {
                std::fputs(out, stdout);
            } else {
                std::fputs(out, stderr);
                std::fputc('\n', stderr);
            }
        }
        mdx_string_free(out);
    }
    mdx_session_free(session);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graded bracket calculus on coordinate charts"};
    app.set_version_flag("--version", mdx_version());
    app.require_subcommand(1);

    std::string eval_path;
    std::vector<std::string> eval_exprs;
    auto* eval_cmd =
        app.add_subcommand("eval", "evaluate a script file, or '-' for standard input");
    eval_cmd->add_option("file", eval_path, "script path");
    eval_cmd->add_option("-e,--expr", eval_exprs,
                         "inline script text, repeatable; overrides the file");

    mdx_suite_config cfg;
    mdx_suite_config_init(&cfg);
    if (const char* env = std::getenv("MDX_SEED")) {
        cfg.seed = std::strtoull(env, nullptr, 10);
    }
    std::string suite = "all";
    bool as_json = false;
    bool list = false;
    bool flip = false;
    auto* check_cmd = app.add_subcommand(
        "check", "run a property suite, or all of them (MDX_SEED overrides the seed)");
    check_cmd->add_option("suite", suite, "suite name, or 'all'")->capture_default_str();
    check_cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    check_cmd->add_option("--trials", cfg.trials, "trials per suite")->capture_default_str();
    check_cmd->add_option("--dim", cfg.dimension, "chart dimension, 1 to 6")
        ->capture_default_str();
    check_cmd->add_option("--ambient", cfg.ambient, "ambient degree n")
        ->capture_default_str();
    check_cmd->add_option("--max-poly-degree", cfg.max_poly_degree,
                          "degree bound for random coefficients")
        ->capture_default_str();
    check_cmd->add_option("--max-terms", cfg.max_terms, "monomials per coefficient")
        ->capture_default_str();
    check_cmd->add_option("--coeff-bound", cfg.coeff_bound, "numerator bound")
        ->capture_default_str();
    check_cmd->add_flag("--json", as_json, "emit the JSON report");
    check_cmd->add_flag("--list", list, "list suites and exit");
    check_cmd->add_flag("--debug-flip-schouten-sign", flip)->group("");

    app.add_subcommand("repl", "interactive session, one statement per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand("eval")) return run_eval(eval_path, eval_exprs);
    if (app.got_subcommand("check")) {
        if (list) {
            char* s = mdx_suite_list();
            if (s != nullptr) std::fputs(s, stdout);
            mdx_string_free(s);
            return 0;
        }
        cfg.flip_schouten_sign = flip ? 1 : 0;
        return run_check(suite, cfg, as_json);
    }
    return run_repl();
}
