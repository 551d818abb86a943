#include "mdx/multidirac.hpp"

#include "mdx/errors.hpp"

namespace mdx {

GraphMultiDirac make_graph(const GradedContext& ctx, Form omega) {
    if (omega.chart() != ctx.chart) throw structural_error("chart mismatch");
    if (omega.degree() != ctx.n + 1)
        throw structural_error("ambient form must have degree n + 1");
    return GraphMultiDirac{ctx, std::move(omega)};
}

DSection graph_embed(const GraphMultiDirac& g, const Multivector& gamma) {
    if (gamma.chart() != g.ctx.chart) throw structural_error("chart mismatch");
    if (gamma.degree() < 1 || gamma.degree() > g.ctx.n)
        throw structural_error("graph section degree out of range 1..n");
    return DSection{g, gamma, contract(gamma, g.omega)};
}

Form isotropy_defect(const GraphMultiDirac& g, const Multivector& gamma,
                     const Multivector& gamma2) {
    return pairing_minus(graph_embed(g, gamma).as_pair(),
                         graph_embed(g, gamma2).as_pair());
}

DSection dirac_wedge(const DSection& a, const DSection& b) {
    if (a.parent != b.parent) throw structural_error("graph mismatch");
    int r = a.gamma.degree(), s = b.gamma.degree();
    const GradedContext& ctx = a.parent.ctx;
    if (r + s > ctx.n) {
        Multivector zg = mv_zero(ctx.chart, r + s > ctx.n ? ctx.n : r + s);
        return DSection{a.parent, zg, form_zero(ctx.chart, ctx.n + 1 - zg.degree())};
    }
    return DSection{a.parent, wedge(a.gamma, b.gamma), contract(b.gamma, a.sigma)};
}

GradedPair dirac_courant(const DSection& a, const DSection& b) {
    if (a.parent != b.parent) throw structural_error("graph mismatch");
    const GradedContext& ctx = a.parent.ctx;
    int r = a.gamma.degree(), s = b.gamma.degree();
    if (r + s > ctx.n + 1) return pair_zero(ctx, r + s - 1);
    Form lead = lie_derivative(a.gamma, b.sigma).scaled(Rational(parity_sign((r - 1) * s)));
    Form tail = contract(b.gamma, ext_deriv(a.sigma));
    return GradedPair{ctx, r + s - 1, schouten(a.gamma, b.gamma), lead - tail};
}

Form t_d_direct(const GradedPair& a, const GradedPair& b, const GradedPair& c) {
    return pairing_minus(a, multi_courant(b, c)).scaled(Rational(2));
}

Form t_d_expanded(const GradedPair& a, const GradedPair& b, const GradedPair& c) {
    if (a.ctx != b.ctx || a.ctx != c.ctx) throw structural_error("context mismatch");
    const GradedContext& ctx = a.ctx;
    int r = a.r, s = b.r, t = c.r;
    int degree = ctx.n + 2 - r - s - t;
    if (degree < 0) return form_zero(ctx.chart, 0);
    Form lead = ext_deriv(contract(b.gamma, contract(c.gamma, a.sigma)))
                    .scaled(Rational(parity_sign((r + s) * t)));
    Form m1 = contract(b.gamma, lie_derivative(a.gamma, c.sigma))
                  .scaled(Rational(parity_sign(s * (t - 1))));
    Form m2 = contract(a.gamma, lie_derivative(c.gamma, b.sigma))
                  .scaled(Rational(parity_sign(r * (s - 1))));
    Form m3 = contract(c.gamma, lie_derivative(b.gamma, a.sigma))
                  .scaled(Rational(parity_sign(t * (r - 1))));
    return (lead - m1 - m2 - m3).scaled(Rational(parity_sign(t * (r - 1))));
}

GradedPair jacobiator(const GradedPair& a, const GradedPair& b, const GradedPair& c) {
    if (a.ctx != b.ctx || a.ctx != c.ctx) throw structural_error("context mismatch");
    int r = a.r, s = b.r, t = c.r;
    GradedPair first = multi_courant(a, multi_courant(b, c));
    GradedPair second =
        pair_scaled(multi_courant(c, multi_courant(a, b)),
                    Rational(parity_sign((t - 1) * (r + s))));
    GradedPair third =
        pair_scaled(multi_courant(b, multi_courant(c, a)),
                    Rational(parity_sign((r - 1) * (s + t))));
    return pair_add(pair_add(first, second), third);
}

Form closedness_check(const GraphMultiDirac& g) { return ext_deriv(g.omega); }

Multivector rho_project(const GradedPair& a) { return a.gamma; }

Poly omega_from_d1(const std::vector<GradedPair>& sections) {
    if (sections.empty()) throw structural_error("no sections given");
    const GradedContext& ctx = sections.front().ctx;
    if (static_cast<int>(sections.size()) != ctx.n + 1)
        throw structural_error("need exactly n + 1 degree-1 sections");
    Multivector acc = mv_scalar(ctx.chart, Poly::constant(ctx.chart.dim(), Rational(1)));
    for (int i = 0; i + 1 < static_cast<int>(sections.size()); ++i) {
        const GradedPair& p = sections[i];
        if (p.ctx != ctx) throw structural_error("context mismatch");
        if (p.r != 1) throw structural_error("sections must have degree 1");
        acc = wedge(acc, p.gamma);
    }
    const GradedPair& last = sections.back();
    if (last.ctx != ctx) throw structural_error("context mismatch");
    if (last.r != 1) throw structural_error("sections must have degree 1");
    return contract(acc, last.sigma).coefficient(0);
}

SpannedStructure make_spanned(const GradedContext& ctx,
                              std::vector<GradedPair> generators) {
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].ctx != ctx) throw structural_error("context mismatch");
        for (size_t j = i; j < generators.size(); ++j) {
            if (generators[i].r + generators[j].r > ctx.n + 1) continue;
            if (!pairing_minus(generators[i], generators[j]).is_zero())
                throw structural_error("generators " + std::to_string(i) + " and " +
                                       std::to_string(j) + " are not isotropic");
        }
    }
    return SpannedStructure{ctx, std::move(generators)};
}

}  // namespace mdx
