#include "mdx/exterior.hpp"

#include "mdx/errors.hpp"

#include <bit>
#include <set>

namespace mdx {

Chart make_chart(std::vector<std::string> names) {
    if (names.empty()) throw structural_error("chart needs at least one variable");
    if (names.size() > 62) throw structural_error("chart dimension exceeds 62");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw structural_error("chart variable name is empty");
        if (!seen.insert(n).second)
            throw structural_error("duplicate chart variable: " + n);
    }
    return Chart{std::move(names)};
}

int below_sign(int j, Blade mask) {
    Blade low = (j == 0) ? 0 : (mask & ((Blade(1) << j) - 1));
    return (std::popcount(low) % 2 == 0) ? 1 : -1;
}

int merge_sign(Blade a, Blade b) {
    if (a & b) return 0;
    int sign = 1;
    Blade rest = b;
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        // dx_j moves left past the factors of a above j.
        Blade above = a >> (j + 1);
        if (std::popcount(above) % 2 != 0) sign = -sign;
    }
    return sign;
}

int clamp_degree(int degree, const Chart& chart) {
    if (degree < 0) return 0;
    if (degree > chart.dim()) return chart.dim();
    return degree;
}

namespace detail {

template <typename Tag>
GradedElement<Tag>::GradedElement(Chart chart, int degree)
    : chart_(std::move(chart)), degree_(degree) {
    if (degree < 0 || degree > chart_.dim())
        throw structural_error("degree out of range for chart");
}

template <typename Tag>
void GradedElement<Tag>::add_term(Blade blade, const Poly& c) {
    if (std::popcount(blade) != degree_)
        throw structural_error("blade size does not match element degree");
    if (blade >> chart_.dim())
        throw structural_error("blade index beyond chart dimension");
    if (c.is_zero()) return;
    auto it = terms_.find(blade);
    if (it == terms_.end()) {
        terms_.emplace(blade, c);
    } else {
        Poly sum = it->second + c;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(sum);
    }
}

template <typename Tag>
Poly GradedElement<Tag>::coefficient(Blade blade) const {
    auto it = terms_.find(blade);
    if (it != terms_.end()) return it->second;
    return Poly(chart_.dim());
}

template <typename Tag>
GradedElement<Tag> GradedElement<Tag>::operator+(const GradedElement& o) const {
    if (chart_ != o.chart_) throw structural_error("chart mismatch");
    if (degree_ != o.degree_) {
        // Degree-clamped zeros act as the zero of every degree.
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        throw structural_error("degree mismatch in sum");
    }
    GradedElement out = *this;
    for (const auto& [b, c] : o.terms_) out.add_term(b, c);
    return out;
}

template <typename Tag>
GradedElement<Tag> GradedElement<Tag>::operator-(const GradedElement& o) const {
    return *this + (-o);
}

template <typename Tag>
GradedElement<Tag> GradedElement<Tag>::operator-() const {
    GradedElement out(chart_, degree_);
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
    return out;
}

template <typename Tag>
GradedElement<Tag> GradedElement<Tag>::scaled(const Poly& c) const {
    GradedElement out(chart_, degree_);
    for (const auto& [b, k] : terms_) {
        Poly p = k * c;
        if (!p.is_zero()) out.terms_.emplace(b, std::move(p));
    }
    return out;
}

template <typename Tag>
GradedElement<Tag> GradedElement<Tag>::scaled(const Rational& c) const {
    GradedElement out(chart_, degree_);
    if (c == 0) return out;
    for (const auto& [b, k] : terms_) out.terms_.emplace(b, k.scaled(c));
    return out;
}

template class GradedElement<struct mv_tag>;
template class GradedElement<struct form_tag>;

}  // namespace detail

Multivector mv_zero(const Chart& chart, int degree) {
    return Multivector(chart, clamp_degree(degree, chart));
}

Multivector mv_scalar(const Chart& chart, const Poly& f) {
    Multivector out(chart, 0);
    out.add_term(0, f);
    return out;
}

Multivector mv_basis(const Chart& chart, int index) {
    if (index < 0 || index >= chart.dim())
        throw structural_error("basis index out of range");
    Multivector out(chart, 1);
    out.add_term(Blade(1) << index, Poly::constant(chart.dim(), Rational(1)));
    return out;
}

Multivector mv_blade(const Chart& chart, Blade blade, const Poly& c) {
    Multivector out(chart, std::popcount(blade));
    out.add_term(blade, c);
    return out;
}

Form form_zero(const Chart& chart, int degree) {
    return Form(chart, clamp_degree(degree, chart));
}

Form form_scalar(const Chart& chart, const Poly& f) {
    Form out(chart, 0);
    out.add_term(0, f);
    return out;
}

Form form_basis(const Chart& chart, int index) {
    if (index < 0 || index >= chart.dim())
        throw structural_error("basis index out of range");
    Form out(chart, 1);
    out.add_term(Blade(1) << index, Poly::constant(chart.dim(), Rational(1)));
    return out;
}

Form form_blade(const Chart& chart, Blade blade, const Poly& c) {
    Form out(chart, std::popcount(blade));
    out.add_term(blade, c);
    return out;
}

namespace {

template <typename Elem>
Elem wedge_impl(const Elem& a, const Elem& b) {
    if (a.chart() != b.chart()) throw structural_error("chart mismatch");
    const Chart& chart = a.chart();
    int degree = a.degree() + b.degree();
    if (degree > chart.dim()) return Elem(chart, chart.dim());
    Elem out(chart, degree);
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            int sign = merge_sign(ba, bb);
            if (sign == 0) continue;
            Poly c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(ba | bb, c);
        }
    }
    return out;
}

// Contraction of blade I into blade J with I's factors applied
// ascending-first; returns the sign, or 0 if I is not a subset of J.
int blade_contract_sign(Blade I, Blade J) {
    if ((I & J) != I) return 0;
    int sign = 1;
    Blade cur = J;
    Blade rest = I;
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        sign *= below_sign(j, cur);
        cur &= ~(Blade(1) << j);
    }
    return sign;
}

}  // namespace

Multivector wedge(const Multivector& a, const Multivector& b) { return wedge_impl(a, b); }
Form wedge(const Form& a, const Form& b) { return wedge_impl(a, b); }

Form contract(const Multivector& gamma, const Form& alpha) {
    if (gamma.chart() != alpha.chart()) throw structural_error("chart mismatch");
    const Chart& chart = gamma.chart();
    int degree = alpha.degree() - gamma.degree();
    if (degree < 0) return Form(chart, 0);
    Form out(chart, degree);
    for (const auto& [I, g] : gamma.terms()) {
        for (const auto& [J, a] : alpha.terms()) {
            int sign = blade_contract_sign(I, J);
            if (sign == 0) continue;
            Poly c = g * a;
            if (sign < 0) c = -c;
            out.add_term(J & ~I, c);
        }
    }
    return out;
}

Multivector contract_one_form(const Form& alpha, const Multivector& gamma) {
    if (gamma.chart() != alpha.chart()) throw structural_error("chart mismatch");
    if (alpha.degree() != 1)
        throw structural_error("only 1-forms contract against multivectors");
    const Chart& chart = gamma.chart();
    int degree = gamma.degree() - 1;
    if (degree < 0) return Multivector(chart, 0);
    Multivector out(chart, degree);
    for (const auto& [A, a] : alpha.terms()) {
        int j = std::countr_zero(A);
        for (const auto& [I, g] : gamma.terms()) {
            if (!(I & A)) continue;
            int sign = below_sign(j, I);
            Poly c = a * g;
            if (sign < 0) c = -c;
            out.add_term(I & ~A, c);
        }
    }
    return out;
}

Form ext_deriv(const Form& alpha) {
    const Chart& chart = alpha.chart();
    int degree = alpha.degree() + 1;
    if (degree > chart.dim()) return Form(chart, chart.dim());
    Form out(chart, degree);
    for (const auto& [J, c] : alpha.terms()) {
        for (int v = 0; v < chart.dim(); ++v) {
            Blade bv = Blade(1) << v;
            if (J & bv) continue;
            Poly dc = c.partial(v);
            if (dc.is_zero()) continue;
            if (below_sign(v, J) < 0) dc = -dc;
            out.add_term(J | bv, dc);
        }
    }
    return out;
}

Form lie_derivative(const Multivector& gamma, const Form& alpha) {
    int k = gamma.degree();
    Form first = ext_deriv(contract(gamma, alpha));
    Form second = contract(gamma, ext_deriv(alpha));
    return (k % 2 == 0) ? first - second : first + second;
}

Multivector schouten(const Multivector& a, const Multivector& b) {
    if (a.chart() != b.chart()) throw structural_error("chart mismatch");
    const Chart& chart = a.chart();
    int k = a.degree();
    int l = b.degree();
    int degree = k + l - 1;
    if (degree < 0) return Multivector(chart, 0);
    if (degree > chart.dim()) return Multivector(chart, chart.dim());
    Multivector out(chart, degree);
    int sign1 = parity_sign(k - 1);
    int sign2 = -parity_sign((l - 1) * k);
    for (const auto& [I, f] : a.terms()) {
        for (const auto& [J, g] : b.terms()) {
            for (int v = 0; v < chart.dim(); ++v) {
                Blade bv = Blade(1) << v;
                if (I & bv) {
                    Poly gv = g.partial(v);
                    if (!gv.is_zero()) {
                        Blade rest = I & ~bv;
                        int s = merge_sign(rest, J);
                        if (s != 0) {
                            Poly c = (f * gv).scaled(Rational(sign1 * s * below_sign(v, I)));
                            out.add_term(rest | J, c);
                        }
                    }
                }
                if (J & bv) {
                    Poly fv = f.partial(v);
                    if (!fv.is_zero()) {
                        Blade rest = J & ~bv;
                        int s = merge_sign(rest, I);
                        if (s != 0) {
                            Poly c = (g * fv).scaled(Rational(sign2 * s * below_sign(v, J)));
                            out.add_term(rest | I, c);
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace mdx
