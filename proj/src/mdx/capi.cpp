#include <mdx/mdx.h>

#include "mdx/errors.hpp"
#include "mdx/eval.hpp"
#include "mdx/suites.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct mdx_session {
    mdx::Session impl;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** slot, const std::string& s) {
    if (slot != nullptr) *slot = dup_string(s);
}

}  // namespace

extern "C" {

const char* mdx_version(void) { return "0.1.0"; }

mdx_session* mdx_session_new(void) {
    try {
        return new mdx_session();
    } catch (...) {
        return nullptr;
    }
}

void mdx_session_free(mdx_session* session) { delete session; }

mdx_status mdx_session_eval(mdx_session* session, const char* source,
                            char** output) {
    if (output != nullptr) *output = nullptr;
    if (session == nullptr || source == nullptr) {
        put(output, "null session or source");
        return MDX_BAD_ARGUMENT;
    }
    try {
        put(output, session->impl.run_source(source));
        return MDX_OK;
    } catch (const mdx::parse_error& e) {
        put(output, e.what());
        return MDX_PARSE_ERROR;
    } catch (const mdx::assertion_failure& e) {
        put(output, e.what());
        return MDX_FAIL;
    } catch (const mdx::unsupported_error& e) {
        put(output, e.what());
        return MDX_UNSUPPORTED;
    } catch (const mdx::structural_error& e) {
        put(output, e.what());
        return MDX_PARSE_ERROR;
    } catch (const std::exception& e) {
        put(output, std::string("internal error: ") + e.what());
        return MDX_UNSUPPORTED;
    }
}

void mdx_suite_config_init(mdx_suite_config* cfg) {
    if (cfg == nullptr) return;
    mdx::SuiteConfig defaults;
    cfg->seed = defaults.gen.seed;
    cfg->trials = defaults.trials;
    cfg->dimension = defaults.gen.dimension;
    cfg->ambient = defaults.gen.ambient;
    cfg->max_poly_degree = defaults.gen.max_poly_degree;
    cfg->max_terms = defaults.gen.max_terms;
    cfg->coeff_bound = static_cast<int32_t>(defaults.gen.coeff_bound);
    cfg->flip_schouten_sign = 0;
}

mdx_status mdx_run_suite(const char* name, const mdx_suite_config* cfg,
                         int as_json, char** report) {
    if (report != nullptr) *report = nullptr;
    if (name == nullptr || cfg == nullptr) {
        put(report, "null suite name or configuration");
        return MDX_BAD_ARGUMENT;
    }
    if (!mdx::is_suite_name(name)) {
        put(report, std::string("unknown suite ") + name);
        return MDX_BAD_ARGUMENT;
    }
    mdx::SuiteConfig sc;
    sc.gen.seed = cfg->seed;
    sc.gen.dimension = cfg->dimension;
    sc.gen.ambient = cfg->ambient;
    sc.gen.max_poly_degree = cfg->max_poly_degree;
    sc.gen.max_terms = cfg->max_terms;
    sc.gen.coeff_bound = cfg->coeff_bound;
    sc.trials = cfg->trials;
    sc.flip_schouten_sign = cfg->flip_schouten_sign != 0;
    try {
        std::vector<mdx::SuiteReport> reports = mdx::run_suites(name, sc);
        bool passed = true;
        for (const auto& r : reports)
            if (!r.passed) passed = false;
        if (as_json != 0) {
            put(report, mdx::reports_json(reports));
        } else {
            std::string text;
            for (const auto& r : reports) text += r.text();
            put(report, text);
        }
        return passed ? MDX_OK : MDX_FAIL;
    } catch (const mdx::structural_error& e) {
        put(report, e.what());
        return MDX_BAD_ARGUMENT;
    } catch (const mdx::unsupported_error& e) {
        put(report, e.what());
        return MDX_UNSUPPORTED;
    } catch (const std::exception& e) {
        put(report, std::string("internal error: ") + e.what());
        return MDX_UNSUPPORTED;
    }
}

char* mdx_suite_list(void) {
    std::string out;
    for (const auto& name : mdx::suite_names()) {
        out += name;
        out += '\t';
        out += mdx::suite_description(name);
        out += '\n';
    }
    return dup_string(out);
}

void mdx_string_free(char* s) { std::free(s); }

}  // extern "C"
