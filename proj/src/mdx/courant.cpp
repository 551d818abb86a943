#include "mdx/courant.hpp"

#include "mdx/errors.hpp"

namespace mdx {

GradedContext make_context(Chart chart, int n) {
    if (n < 1) throw structural_error("ambient degree must be at least 1");
    if (n > chart.dim())
        throw structural_error("ambient degree exceeds chart dimension");
    return GradedContext{std::move(chart), n};
}

GradedPair make_pair(const GradedContext& ctx, Multivector gamma, Form sigma) {
    if (gamma.chart() != ctx.chart || sigma.chart() != ctx.chart)
        throw structural_error("chart mismatch");
    int r = gamma.degree();
    if (r < 1 || r > ctx.n)
        throw structural_error("section degree out of range 1..n");
    if (sigma.degree() != clamp_degree(ctx.n + 1 - r, ctx.chart))
        throw structural_error("form degree does not complement section degree");
    return GradedPair{ctx, r, std::move(gamma), std::move(sigma)};
}

GradedPair pair_zero(const GradedContext& ctx, int r) {
    int rc = r < 1 ? 1 : (r > ctx.n ? ctx.n : r);
    return GradedPair{ctx, rc, mv_zero(ctx.chart, rc),
                      form_zero(ctx.chart, ctx.n + 1 - rc)};
}

GradedPair pair_add(const GradedPair& a, const GradedPair& b) {
    if (a.ctx != b.ctx) throw structural_error("context mismatch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.r != b.r) throw structural_error("degree mismatch in section sum");
    return GradedPair{a.ctx, a.r, a.gamma + b.gamma, a.sigma + b.sigma};
}

GradedPair pair_neg(const GradedPair& a) {
    return GradedPair{a.ctx, a.r, -a.gamma, -a.sigma};
}

GradedPair pair_scaled(const GradedPair& a, const Rational& c) {
    return GradedPair{a.ctx, a.r, a.gamma.scaled(c), a.sigma.scaled(c)};
}

namespace {

Form pairing_impl(const GradedPair& a, const GradedPair& b, int plus) {
    if (a.ctx != b.ctx) throw structural_error("context mismatch");
    const GradedContext& ctx = a.ctx;
    int r = a.r, s = b.r;
    if (r + s > ctx.n + 1) return form_zero(ctx.chart, ctx.n + 1 - r - s);
    Form left = contract(b.gamma, a.sigma);
    Form right = contract(a.gamma, b.sigma).scaled(Rational(parity_sign(r * s) * plus));
    return (left + right).scaled(Rational(1, 2));
}

}  // namespace

Form pairing_minus(const GradedPair& a, const GradedPair& b) {
    return pairing_impl(a, b, -1);
}

Form pairing_plus(const GradedPair& a, const GradedPair& b) {
    return pairing_impl(a, b, 1);
}

GradedPair section_wedge(const GradedPair& a, const GradedPair& b) {
    if (a.ctx != b.ctx) throw structural_error("context mismatch");
    const GradedContext& ctx = a.ctx;
    if (a.r + b.r > ctx.n) return pair_zero(ctx, a.r + b.r);
    return GradedPair{ctx, a.r + b.r, wedge(a.gamma, b.gamma), pairing_plus(a, b)};
}

GradedPair multi_courant(const GradedPair& a, const GradedPair& b) {
    if (a.ctx != b.ctx) throw structural_error("context mismatch");
    const GradedContext& ctx = a.ctx;
    int r = a.r, s = b.r;
    if (r + s > ctx.n + 1) return pair_zero(ctx, r + s - 1);
    Form part = lie_derivative(a.gamma, b.sigma).scaled(Rational(parity_sign((r - 1) * s)));
    Form rest = lie_derivative(b.gamma, a.sigma) - ext_deriv(pairing_plus(a, b));
    return GradedPair{ctx, r + s - 1, schouten(a.gamma, b.gamma),
                      part + rest.scaled(Rational(parity_sign(s)))};
}

GradedPair gauge_transform(const Form& sigma, const GradedPair& a) {
    if (sigma.chart() != a.ctx.chart) throw structural_error("chart mismatch");
    if (sigma.degree() != clamp_degree(a.ctx.n + 1, a.ctx.chart))
        throw structural_error("gauge form must have degree n + 1");
    return GradedPair{a.ctx, a.r, a.gamma, a.sigma + contract(a.gamma, sigma)};
}

Section::Section(const GradedPair& a) : ctx_(a.ctx) { add_component(a); }

GradedPair Section::sole_component() const {
    if (comps_.empty()) return pair_zero(ctx_, 1);
    if (comps_.size() > 1)
        throw structural_error("section is not homogeneous");
    return comps_.begin()->second;
}

void Section::add_component(const GradedPair& a) {
    if (a.ctx != ctx_) throw structural_error("context mismatch");
    auto it = comps_.find(a.r);
    if (it == comps_.end()) {
        if (!a.is_zero()) comps_.emplace(a.r, a);
        return;
    }
    GradedPair sum = pair_add(it->second, a);
    if (sum.is_zero())
        comps_.erase(it);
    else
        it->second = std::move(sum);
}

Section section_add(const Section& a, const Section& b) {
    if (a.ctx() != b.ctx()) throw structural_error("context mismatch");
    Section out = a;
    for (const auto& [r, p] : b.components()) out.add_component(p);
    return out;
}

Section section_neg(const Section& a) {
    Section out(a.ctx());
    for (const auto& [r, p] : a.components()) out.add_component(pair_neg(p));
    return out;
}

Section section_scaled(const Section& a, const Rational& c) {
    Section out(a.ctx());
    for (const auto& [r, p] : a.components()) out.add_component(pair_scaled(p, c));
    return out;
}

namespace {

template <typename Op>
Section section_bilinear(const Section& a, const Section& b, Op op) {
    if (a.ctx() != b.ctx()) throw structural_error("context mismatch");
    Section out(a.ctx());
    for (const auto& [r, p] : a.components())
        for (const auto& [s, q] : b.components()) out.add_component(op(p, q));
    return out;
}

}  // namespace

Section section_wedge(const Section& a, const Section& b) {
    return section_bilinear(a, b, [](const GradedPair& p, const GradedPair& q) {
        return section_wedge(p, q);
    });
}

Section multi_courant(const Section& a, const Section& b) {
    return section_bilinear(a, b, [](const GradedPair& p, const GradedPair& q) {
        return multi_courant(p, q);
    });
}

Section gauge_transform(const Form& sigma, const Section& a) {
    Section out(a.ctx());
    for (const auto& [r, p] : a.components())
        out.add_component(gauge_transform(sigma, p));
    return out;
}

namespace {

std::map<int, Form> pairing_sections(const Section& a, const Section& b, bool plus) {
    if (a.ctx() != b.ctx()) throw structural_error("context mismatch");
    std::map<int, Form> out;
    for (const auto& [r, p] : a.components()) {
        for (const auto& [s, q] : b.components()) {
            Form f = plus ? pairing_plus(p, q) : pairing_minus(p, q);
            if (f.is_zero()) continue;
            auto it = out.find(f.degree());
            if (it == out.end()) {
                out.emplace(f.degree(), std::move(f));
            } else {
                Form sum = it->second + f;
                if (sum.is_zero())
                    out.erase(it);
                else
                    it->second = std::move(sum);
            }
        }
    }
    return out;
}

}  // namespace

std::map<int, Form> pairing_minus(const Section& a, const Section& b) {
    return pairing_sections(a, b, false);
}

std::map<int, Form> pairing_plus(const Section& a, const Section& b) {
    return pairing_sections(a, b, true);
}

}  // namespace mdx
