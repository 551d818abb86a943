#pragma once

#include "mdx/generator.hpp"

#include <string>
#include <vector>

namespace mdx {

struct SuiteConfig {
    GeneratorConfig gen;
    int trials = 100;
    // Debug mutation hook: negates the Schouten bracket inside the
    // bracket-calculus suites, which must make them fail.
    bool flip_schouten_sign = false;
};

struct SuiteFailure {
    int trial;
    std::string identity;
    std::string inputs;
    std::string defect;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed;
    int trials;
    bool passed;
    std::vector<SuiteFailure> failures;  // capped at 10 entries
    long long millis;

    std::string text() const;
    std::string json() const;
};

// Fixed registry order; "all" is accepted by run_suites, not listed here.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);  // includes "all"
std::string suite_description(const std::string& name);

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);
std::vector<SuiteReport> run_suites(const std::string& name_or_all,
                                    const SuiteConfig& cfg);
std::string reports_json(const std::vector<SuiteReport>& reports);

}  // namespace mdx
