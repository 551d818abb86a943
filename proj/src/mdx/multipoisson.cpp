#include "mdx/multipoisson.hpp"

#include "mdx/errors.hpp"
#include "mdx/linsolve.hpp"

#include <bit>
#include <map>

namespace mdx {

namespace {

// Ascending list of degree-k blades over dim variables.
std::vector<Blade> blades_of_degree(int dim, int k) {
    std::vector<Blade> out;
    for (Blade b = 0; b < (Blade(1) << dim); ++b)
        if (std::popcount(b) == k) out.push_back(b);
    return out;
}

bool form_is_constant(const Form& f) {
    for (const auto& [b, c] : f.terms())
        if (!c.is_constant()) return false;
    return true;
}

// Columns of the constant-coefficient map G -> i_G Omega, restricted to
// degree-r blades; rows are blades of degree n + 1 - r.
struct ContractionMatrix {
    std::vector<Blade> cols;
    std::vector<Blade> rows;
    std::map<Blade, size_t> row_index;
    std::vector<std::vector<Rational>> m;
};

ContractionMatrix contraction_matrix(const GraphMultiDirac& g, int r) {
    const Chart& chart = g.ctx.chart;
    ContractionMatrix cm;
    cm.cols = blades_of_degree(chart.dim(), r);
    cm.rows = blades_of_degree(chart.dim(), g.ctx.n + 1 - r);
    for (size_t i = 0; i < cm.rows.size(); ++i) cm.row_index[cm.rows[i]] = i;
    cm.m.assign(cm.rows.size(), std::vector<Rational>(cm.cols.size(), Rational(0)));
    for (size_t j = 0; j < cm.cols.size(); ++j) {
        Form image = contract(mv_blade(chart, cm.cols[j], Poly::constant(chart.dim(), Rational(1))),
                              g.omega);
        for (const auto& [b, c] : image.terms())
            cm.m[cm.row_index.at(b)][j] = c.constant_value();
    }
    return cm;
}

}  // namespace

Form verify_admissible(const GraphMultiDirac& g, const Form& sigma,
                       const Multivector& gamma) {
    return contract(gamma, g.omega) - ext_deriv(sigma);
}

AdmissibleForm make_admissible(const GraphMultiDirac& g, Form sigma,
                               Multivector gamma) {
    if (sigma.chart() != g.ctx.chart || gamma.chart() != g.ctx.chart)
        throw structural_error("chart mismatch");
    int grade = g.ctx.n - sigma.degree() - 1;
    if (grade < 0) throw structural_error("form degree exceeds n - 1");
    if (!gamma.is_zero() && gamma.degree() != grade + 1)
        throw structural_error("witness degree must be one above the grade");
    Form defect = verify_admissible(g, sigma, gamma);
    AdmissibleForm out{g, std::move(sigma), std::move(gamma), grade, std::nullopt};
    if (!defect.is_zero()) out.defect = std::move(defect);
    return out;
}

std::optional<Multivector> solve_hamiltonian(const GraphMultiDirac& g,
                                             const Form& sigma) {
    if (sigma.chart() != g.ctx.chart) throw structural_error("chart mismatch");
    if (!form_is_constant(g.omega))
        throw unsupported_error("witness solver needs a constant-coefficient ambient form");
    const Chart& chart = g.ctx.chart;
    int r = g.ctx.n - sigma.degree();
    if (r < 1 || r > g.ctx.n)
        throw structural_error("form degree admits no witness degree in 1..n");
    ContractionMatrix cm = contraction_matrix(g, r);
    Form target = ext_deriv(sigma);

    // Regroup d Sigma by monomial: each monomial contributes one constant
    // right-hand side over the row blades.
    std::map<Mono, std::vector<Rational>> rhs_by_mono;
    for (const auto& [b, c] : target.terms()) {
        size_t row = cm.row_index.at(b);
        for (const auto& [mono, coeff] : c.terms()) {
            auto [it, fresh] =
                rhs_by_mono.try_emplace(mono, std::vector<Rational>(cm.rows.size(), Rational(0)));
            it->second[row] = coeff;
        }
    }

    Multivector gamma = mv_zero(chart, r);
    for (const auto& [mono, rhs] : rhs_by_mono) {
        LinearSolution sol = solve_linear(cm.m, rhs);
        if (!sol.particular) return std::nullopt;
        for (size_t j = 0; j < cm.cols.size(); ++j) {
            const Rational& c = (*sol.particular)[j];
            if (c == 0) continue;
            gamma = gamma + mv_blade(chart, cm.cols[j], Poly::monomial(chart.dim(), mono, c));
        }
    }
    return gamma;
}

std::vector<Multivector> hamiltonian_kernel(const GraphMultiDirac& g, int r) {
    if (!form_is_constant(g.omega))
        throw unsupported_error("witness solver needs a constant-coefficient ambient form");
    if (r < 1 || r > g.ctx.n) throw structural_error("kernel degree out of range 1..n");
    const Chart& chart = g.ctx.chart;
    ContractionMatrix cm = contraction_matrix(g, r);
    LinearSolution sol = solve_linear(cm.m, std::vector<Rational>(cm.rows.size(), Rational(0)));
    std::vector<Multivector> out;
    for (const auto& v : sol.nullspace) {
        Multivector k = mv_zero(chart, r);
        for (size_t j = 0; j < cm.cols.size(); ++j)
            if (v[j] != 0)
                k = k + mv_blade(chart, cm.cols[j], Poly::constant(chart.dim(), v[j]));
        out.push_back(std::move(k));
    }
    return out;
}

AdmissibleForm poisson_bracket(const AdmissibleForm& a, const AdmissibleForm& b) {
    if (a.parent != b.parent) throw structural_error("graph mismatch");
    const GraphMultiDirac& g = a.parent;
    const Chart& chart = g.ctx.chart;
    int k = a.grade, l = b.grade;
    if (k + l > g.ctx.n - 1) {
        int grade = g.ctx.n - 1;
        return AdmissibleForm{g, form_zero(chart, g.ctx.n - grade - 1),
                              mv_zero(chart, grade + 1), grade, std::nullopt};
    }
    Form sigma = contract(b.gamma, ext_deriv(a.sigma)).scaled(Rational(-parity_sign(k)));
    Multivector gamma = schouten(a.gamma, b.gamma).scaled(Rational(parity_sign(k + l)));
    return make_admissible(g, std::move(sigma), std::move(gamma));
}

Form jacobi_defect(const AdmissibleForm& a, const AdmissibleForm& b,
                   const AdmissibleForm& c) {
    if (a.parent != b.parent || a.parent != c.parent)
        throw structural_error("graph mismatch");
    int k = a.grade, l = b.grade, m = c.grade;
    Form lhs1 = poisson_bracket(poisson_bracket(a, b), c).sigma.scaled(
        Rational(parity_sign(k * m)));
    Form lhs2 = poisson_bracket(poisson_bracket(b, c), a).sigma.scaled(
        Rational(parity_sign(l * k)));
    Form lhs3 = poisson_bracket(poisson_bracket(c, a), b).sigma.scaled(
        Rational(parity_sign(m * l)));
    Form rhs = ext_deriv(contract(b.gamma, contract(c.gamma, ext_deriv(a.sigma))))
                   .scaled(Rational(parity_sign((k + l) * (m - 1))));
    return lhs1 + lhs2 + lhs3 - rhs;
}

}  // namespace mdx
