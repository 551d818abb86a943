#include "mdx/generator.hpp"

#include "mdx/errors.hpp"
#include "mdx/homotopy.hpp"

#include <bit>

namespace mdx {

void validate_config(const GeneratorConfig& cfg) {
    if (cfg.dimension < 1 || cfg.dimension > 6)
        throw structural_error("generator dimension must be in 1..6");
    if (cfg.ambient < 1 || cfg.ambient > cfg.dimension)
        throw structural_error("ambient degree must be in 1..dimension");
    if (cfg.max_poly_degree < 0 || cfg.max_poly_degree > 2)
        throw structural_error("max polynomial degree must be in 0..2");
    if (cfg.max_terms < 1 || cfg.max_terms > 3)
        throw structural_error("max terms per coefficient must be in 1..3");
    if (cfg.coeff_bound < 1) throw structural_error("coefficient bound must be positive");
}

Chart generator_chart(const GeneratorConfig& cfg) {
    static const char* names[] = {"x1", "x2", "x3", "x4", "x5", "x6"};
    std::vector<std::string> v;
    for (int i = 0; i < cfg.dimension; ++i) v.push_back(names[i]);
    return make_chart(std::move(v));
}

Rational random_rational(Rng& rng, const GeneratorConfig& cfg) {
    long long num = rng.range(1, cfg.coeff_bound);
    if (rng.coin()) num = -num;
    long long den = rng.range(1, 3);
    return Rational(Integer(num), Integer(den));
}

namespace {

// Restricting to the first `active` variables keeps block-graph inputs
// inside the span of the ambient form.
Poly random_poly_active(Rng& rng, const Chart& chart, const GeneratorConfig& cfg,
                        int active, int max_terms) {
    Poly p(chart.dim());
    int nterms = static_cast<int>(rng.range(1, max_terms));
    for (int t = 0; t < nterms; ++t) {
        Mono m(chart.dim(), 0);
        int total = static_cast<int>(rng.range(0, cfg.max_poly_degree));
        for (int u = 0; u < total; ++u)
            m[static_cast<size_t>(rng.below(active))] += 1;
        p.add_term(m, random_rational(rng, cfg));
    }
    return p;
}

Blade random_blade(Rng& rng, int active, int degree) {
    Blade b = 0;
    while (std::popcount(b) < degree) b |= Blade(1) << rng.below(active);
    return b;
}

template <typename Elem, typename MakeZero>
Elem random_graded(Rng& rng, const Chart& chart, const GeneratorConfig& cfg,
                   int active, int degree, MakeZero make_zero) {
    Elem out = make_zero(chart, degree);
    if (degree > active) return out;
    int nblades = static_cast<int>(rng.range(1, 2));
    for (int t = 0; t < nblades; ++t)
        out.add_term(random_blade(rng, active, degree),
                     random_poly_active(rng, chart, cfg, active, cfg.max_terms));
    return out;
}

Form random_form_active(Rng& rng, const Chart& chart, const GeneratorConfig& cfg,
                        int active, int degree) {
    return random_graded<Form>(rng, chart, cfg, active, degree,
                               [](const Chart& c, int d) { return form_zero(c, d); });
}

}  // namespace

Poly random_poly(Rng& rng, const Chart& chart, const GeneratorConfig& cfg) {
    return random_poly_active(rng, chart, cfg, chart.dim(), cfg.max_terms);
}

Multivector random_mv(Rng& rng, const Chart& chart, const GeneratorConfig& cfg, int degree) {
    return random_graded<Multivector>(rng, chart, cfg, chart.dim(), degree,
                                      [](const Chart& c, int d) { return mv_zero(c, d); });
}

Form random_form(Rng& rng, const Chart& chart, const GeneratorConfig& cfg, int degree) {
    return random_form_active(rng, chart, cfg, chart.dim(), degree);
}

Form random_closed_form(Rng& rng, const Chart& chart, const GeneratorConfig& cfg,
                        int degree) {
    if (degree < 1) throw structural_error("closed generator needs degree >= 1");
    Form out = ext_deriv(random_form(rng, chart, cfg, degree - 1));
    // Redraw when the primitive happened to be closed; a zero result would
    // make the trial vacuous.
    for (int attempt = 0; attempt < 7 && out.is_zero() && degree <= chart.dim();
         ++attempt)
        out = ext_deriv(random_form(rng, chart, cfg, degree - 1));
    return out;
}

GradedPair random_pair(Rng& rng, const GradedContext& ctx, const GeneratorConfig& cfg,
                       int r) {
    return make_pair(ctx, random_mv(rng, ctx.chart, cfg, r),
                     random_form(rng, ctx.chart, cfg, ctx.n + 1 - r));
}

GraphMultiDirac random_graph(Rng& rng, const GradedContext& ctx,
                             const GeneratorConfig& cfg, bool closed) {
    Form omega = closed ? random_closed_form(rng, ctx.chart, cfg, ctx.n + 1)
                        : random_form(rng, ctx.chart, cfg, ctx.n + 1);
    return make_graph(ctx, std::move(omega));
}

GraphMultiDirac block_graph(const GradedContext& ctx) {
    const Chart& chart = ctx.chart;
    if (ctx.n + 1 > chart.dim())
        throw structural_error("block graph needs dimension >= n + 1");
    Blade top = (Blade(1) << (ctx.n + 1)) - 1;
    return make_graph(ctx, form_blade(chart, top,
                                      Poly::constant(chart.dim(), Rational(1))));
}

GraphMultiDirac random_constant_graph(Rng& rng, const GradedContext& ctx,
                                      const GeneratorConfig& cfg) {
    const Chart& chart = ctx.chart;
    Form omega = form_zero(chart, ctx.n + 1);
    int nblades = static_cast<int>(rng.range(1, 2));
    for (int t = 0; t < nblades; ++t)
        omega.add_term(random_blade(rng, chart.dim(), ctx.n + 1),
                       Poly::constant(chart.dim(), random_rational(rng, cfg)));
    return make_graph(ctx, std::move(omega));
}

AdmissibleForm random_admissible(Rng& rng, const GraphMultiDirac& g,
                                 const GeneratorConfig& cfg, int grade,
                                 bool polynomial_witness) {
    const GradedContext& ctx = g.ctx;
    if (grade < 0 || grade > ctx.n - 1)
        throw structural_error("grade out of range 0..n-1");
    for (const auto& [b, c] : g.omega.terms())
        if (!c.is_constant())
            throw unsupported_error("admissible generator needs a constant ambient form");
    const Chart& chart = ctx.chart;
    if (polynomial_witness) {
        Form sigma =
            random_form_active(rng, chart, cfg, ctx.n + 1, ctx.n - grade - 1);
        auto witness = solve_hamiltonian(g, sigma);
        if (!witness)
            throw structural_error("generated form unexpectedly has no witness");
        return make_admissible(g, std::move(sigma), std::move(*witness));
    }
    int r = grade + 1;
    Multivector gamma = mv_zero(chart, r);
    int nblades = static_cast<int>(rng.range(1, 2));
    for (int t = 0; t < nblades; ++t)
        gamma.add_term(random_blade(rng, chart.dim(), r),
                       Poly::constant(chart.dim(), random_rational(rng, cfg)));
    Form sigma = homotopy_primitive(contract(gamma, g.omega));
    return make_admissible(g, std::move(sigma), std::move(gamma));
}

}  // namespace mdx
