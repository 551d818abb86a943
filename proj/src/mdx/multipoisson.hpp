#pragma once

#include "mdx/multidirac.hpp"

#include <optional>
#include <vector>

namespace mdx {

// A form Sigma of degree n - r - ... admissible for a graph structure when
// some witness Gamma satisfies i_Gamma Omega = d Sigma. The grade is
// n - deg(Sigma) - 1, so the witness has degree grade + 1.
struct AdmissibleForm {
    GraphMultiDirac parent;
    Form sigma;
    Multivector gamma;
    int grade;
    // Empty for a genuine admissible form; otherwise i_G Omega - d Sigma.
    std::optional<Form> defect;
    bool admissible() const { return !defect.has_value(); }
};

// Wraps (sigma, gamma) after checking degrees and the defining equation;
// a nonzero defect is recorded, not rejected.
AdmissibleForm make_admissible(const GraphMultiDirac& g, Form sigma,
                               Multivector gamma);

// i_G Omega - d Sigma for a proposed witness.
Form verify_admissible(const GraphMultiDirac& g, const Form& sigma,
                       const Multivector& gamma);

// Solves i_G Omega = d Sigma for Gamma with polynomial coefficients,
// monomial by monomial; requires Omega to have constant coefficients.
// Returns nothing when d Sigma is outside the image.
std::optional<Multivector> solve_hamiltonian(const GraphMultiDirac& g,
                                             const Form& sigma);

// Constant multivectors of degree r spanning the kernel of G -> i_G Omega.
std::vector<Multivector> hamiltonian_kernel(const GraphMultiDirac& g, int r);

// {A, B} = -(-1)^{|A|} i_{G_B} d Sigma_A with witness
// (-1)^{|A| + |B|} [G_A, G_B]; grade adds.
AdmissibleForm poisson_bracket(const AdmissibleForm& a, const AdmissibleForm& b);

// (-1)^{km} {{A, B}, C} + (-1)^{lk} {{B, C}, A} + (-1)^{ml} {{C, A}, B}
//   - (-1)^{(k+l)(m-1)} d i_{G_B} i_{G_C} d Sigma_A
// for grades k, l, m; requires d Omega = 0.
Form jacobi_defect(const AdmissibleForm& a, const AdmissibleForm& b,
                   const AdmissibleForm& c);

}  // namespace mdx
