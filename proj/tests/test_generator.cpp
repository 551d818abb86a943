#include <doctest.h>

#include "mdx/errors.hpp"
#include "mdx/generator.hpp"

using namespace mdx;

TEST_CASE("config validation") {
    GeneratorConfig ok;
    CHECK_NOTHROW(validate_config(ok));

    auto broken = [](auto mutate) {
        GeneratorConfig cfg;
        mutate(cfg);
        return cfg;
    };
    CHECK_THROWS_AS(validate_config(broken([](auto& c) { c.dimension = 0; })),
                    structural_error);
    CHECK_THROWS_AS(validate_config(broken([](auto& c) { c.dimension = 7; })),
                    structural_error);
    CHECK_THROWS_AS(validate_config(broken([](auto& c) { c.ambient = 0; })),
                    structural_error);
    CHECK_THROWS_AS(validate_config(broken([](auto& c) { c.ambient = 4; })),
                    structural_error);
    CHECK_THROWS_AS(validate_config(broken([](auto& c) { c.max_poly_degree = 3; })),
                    structural_error);
    CHECK_THROWS_AS(validate_config(broken([](auto& c) { c.max_terms = 0; })),
                    structural_error);
    CHECK_THROWS_AS(validate_config(broken([](auto& c) { c.coeff_bound = 0; })),
                    structural_error);
}

TEST_CASE("streams are deterministic in the seed") {
    GeneratorConfig cfg;
    cfg.dimension = 4;
    cfg.ambient = 2;
    Chart chart = generator_chart(cfg);
    CHECK(chart.names == std::vector<std::string>{"x1", "x2", "x3", "x4"});

    Rng a(99), b(99), c(100);
    Rng a2(99);
    CHECK(random_poly(a, chart, cfg) == random_poly(a2, chart, cfg));
    CHECK(random_mv(a, chart, cfg, 2) == random_mv(a2, chart, cfg, 2));
    CHECK(random_form(a, chart, cfg, 1) == random_form(a2, chart, cfg, 1));
    CHECK(random_poly(b, chart, cfg) != random_poly(c, chart, cfg));
    // trial streams decorrelate
    Rng t0 = trial_rng(42, 0), t1 = trial_rng(42, 1);
    CHECK(random_poly(t0, chart, cfg) != random_poly(t1, chart, cfg));
}

TEST_CASE("drawn elements respect the bounds") {
    GeneratorConfig cfg;
    cfg.dimension = 3;
    cfg.ambient = 2;
    Chart chart = generator_chart(cfg);
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        Poly p = random_poly(rng, chart, cfg);
        CHECK(p.total_degree() <= cfg.max_poly_degree);
        CHECK(static_cast<int>(p.terms().size()) <= cfg.max_terms);

        Form f = random_form(rng, chart, cfg, 2);
        CHECK(f.degree() == 2);
        for (const auto& [blade, c] : f.terms())
            CHECK(c.total_degree() <= cfg.max_poly_degree);

        Multivector m = random_mv(rng, chart, cfg, 1);
        CHECK(m.degree() == 1);
    }
    // Degrees past the dimension have only the zero element.
    CHECK(random_form(rng, chart, cfg, 4).is_zero());
    CHECK(random_mv(rng, chart, cfg, 5).is_zero());
}

TEST_CASE("closed form generator") {
    GeneratorConfig cfg;
    Chart chart = generator_chart(cfg);
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        Form w = random_closed_form(rng, chart, cfg, 2);
        CHECK(ext_deriv(w).is_zero());
        CHECK(!w.is_zero());
    }
    CHECK_THROWS_AS(random_closed_form(rng, chart, cfg, 0), structural_error);
}

TEST_CASE("graph generators") {
    GeneratorConfig cfg;
    cfg.dimension = 4;
    cfg.ambient = 2;
    GradedContext ctx = make_context(generator_chart(cfg), cfg.ambient);
    Rng rng(21);

    GraphMultiDirac block = block_graph(ctx);
    CHECK(block.omega.degree() == 3);
    CHECK(closedness_check(block).is_zero());
    auto kernel = hamiltonian_kernel(block, 1);
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0] == mv_basis(ctx.chart, 3));

    GradedContext tight = make_context(make_chart({"x1", "x2"}), 2);
    CHECK_THROWS_AS(block_graph(tight), structural_error);

    for (int t = 0; t < 20; ++t) {
        GraphMultiDirac g = random_constant_graph(rng, ctx, cfg);
        CHECK(g.omega.degree() == ctx.n + 1);
        CHECK(closedness_check(g).is_zero());
        GraphMultiDirac closed = random_graph(rng, ctx, cfg, true);
        CHECK(closedness_check(closed).is_zero());
    }
}

TEST_CASE("admissible generator both modes") {
    GeneratorConfig cfg;
    cfg.dimension = 4;
    cfg.ambient = 2;
    GradedContext ctx = make_context(generator_chart(cfg), cfg.ambient);
    GraphMultiDirac g = block_graph(ctx);
    Rng rng(31);
    for (int grade : {0, 1}) {
        for (int t = 0; t < 15; ++t) {
            AdmissibleForm cst = random_admissible(rng, g, cfg, grade, false);
            CHECK(cst.admissible());
            CHECK(cst.grade == grade);
            AdmissibleForm pol = random_admissible(rng, g, cfg, grade, true);
            CHECK(pol.admissible());
            CHECK(pol.grade == grade);
        }
    }
    CHECK_THROWS_AS(random_admissible(rng, g, cfg, 2, false), structural_error);
    GraphMultiDirac wild =
        make_graph(ctx, form_blade(ctx.chart, 0b0111, Poly::variable(4, 3)));
    CHECK_THROWS_AS(random_admissible(rng, wild, cfg, 0, false), unsupported_error);
}

TEST_CASE("random pairs have matching component degrees") {
    GeneratorConfig cfg;
    GradedContext ctx = make_context(generator_chart(cfg), cfg.ambient);
    Rng rng(5);
    for (int r = 1; r <= ctx.n; ++r) {
        GradedPair a = random_pair(rng, ctx, cfg, r);
        CHECK(a.r == r);
        CHECK(a.gamma.degree() == r);
        CHECK(a.sigma.degree() == ctx.n + 1 - r);
    }
}
