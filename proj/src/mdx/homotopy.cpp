#include "mdx/homotopy.hpp"

#include "mdx/errors.hpp"

#include <bit>

namespace mdx {

Form homotopy_primitive(const Form& alpha) {
    const Chart& chart = alpha.chart();
    int k = alpha.degree();
    if (k == 0) return form_zero(chart, 0);
    Form out(chart, k - 1);
    for (const auto& [J, c] : alpha.terms()) {
        for (const auto& [mono, coeff] : c.terms()) {
            int p = 0;
            for (auto e : mono) p += e;
            Rational scale = coeff / Rational(p + k);
            int m = 0;
            Blade rest = J;
            while (rest) {
                int j = std::countr_zero(rest);
                rest &= rest - 1;
                Mono bumped = mono;
                if (bumped[j] == 255) throw structural_error("monomial exponent overflow");
                bumped[j] += 1;
                Rational c2 = (m % 2 == 0) ? scale : -scale;
                out.add_term(J & ~(Blade(1) << j),
                             Poly::monomial(chart.dim(), bumped, c2));
                ++m;
            }
        }
    }
    return out;
}

}  // namespace mdx
