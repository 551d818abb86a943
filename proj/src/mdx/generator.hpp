#pragma once

#include "mdx/multidirac.hpp"
#include "mdx/multipoisson.hpp"
#include "mdx/rng.hpp"

namespace mdx {

// Bounds for random inputs. Kept deliberately tight: dimensions up to 6 and
// quadratic coefficients already distinguish every sign convention, and
// exact arithmetic stays fast.
struct GeneratorConfig {
    std::uint64_t seed = 42;
    int dimension = 3;
    int ambient = 2;       // n
    int max_poly_degree = 2;
    int max_terms = 3;     // monomials per polynomial coefficient
    long coeff_bound = 4;  // numerators in [-bound, bound], denominators in [1, 3]
};

void validate_config(const GeneratorConfig& cfg);

Chart generator_chart(const GeneratorConfig& cfg);

Rational random_rational(Rng& rng, const GeneratorConfig& cfg);
Poly random_poly(Rng& rng, const Chart& chart, const GeneratorConfig& cfg);
Multivector random_mv(Rng& rng, const Chart& chart, const GeneratorConfig& cfg, int degree);
Form random_form(Rng& rng, const Chart& chart, const GeneratorConfig& cfg, int degree);
// d of a random form one degree down, so closed by construction; degree >= 1.
Form random_closed_form(Rng& rng, const Chart& chart, const GeneratorConfig& cfg, int degree);

GradedPair random_pair(Rng& rng, const GradedContext& ctx, const GeneratorConfig& cfg, int r);

// Ambient (n+1)-form for graph structures, closed or generic.
GraphMultiDirac random_graph(Rng& rng, const GradedContext& ctx,
                             const GeneratorConfig& cfg, bool closed);

// Graph structure whose ambient form is dx_1 ^ ... ^ dx_{n+1}; with
// dimension > n + 1 the witness map has a kernel.
GraphMultiDirac block_graph(const GradedContext& ctx);

// Random ambient form with constant coefficients, closed for free.
GraphMultiDirac random_constant_graph(Rng& rng, const GradedContext& ctx,
                                      const GeneratorConfig& cfg);

// Admissible forms for a constant-coefficient ambient form, two ways:
// `polynomial_witness` false draws a constant witness and integrates its
// contraction (primitives via the radial homotopy), which keeps d Sigma
// constant; true draws a polynomial form over the first n + 1 variables of
// a block graph and solves for the witness, giving nonconstant d Sigma.
AdmissibleForm random_admissible(Rng& rng, const GraphMultiDirac& g,
                                 const GeneratorConfig& cfg, int grade,
                                 bool polynomial_witness);

}  // namespace mdx
