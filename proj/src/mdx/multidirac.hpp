#pragma once

#include "mdx/courant.hpp"

#include <vector>

namespace mdx {

// The graph structure induced by an ambient form Omega of degree n + 1:
// component r consists of the pairs (G, i_G Omega).
struct GraphMultiDirac {
    GradedContext ctx;
    Form omega;
    bool operator==(const GraphMultiDirac& o) const = default;
};

GraphMultiDirac make_graph(const GradedContext& ctx, Form omega);

// A section of a graph structure; sigma is the cached contraction i_G Omega.
struct DSection {
    GraphMultiDirac parent;
    Multivector gamma;
    Form sigma;
    GradedPair as_pair() const { return GradedPair{parent.ctx, gamma.degree(), gamma, sigma}; }
    bool operator==(const DSection& o) const = default;
};

DSection graph_embed(const GraphMultiDirac& g, const Multivector& gamma);

// <<., .>>_- of two graph sections; identically zero for any Omega.
Form isotropy_defect(const GraphMultiDirac& g, const Multivector& gamma,
                     const Multivector& gamma2);

// Product and bracket restricted to graph sections. The bracket simplifies:
// [[a, b]] = ([G, G'], (-1)^{(r-1)s} L_G S' - i_{G'} d S).
DSection dirac_wedge(const DSection& a, const DSection& b);
GradedPair dirac_courant(const DSection& a, const DSection& b);

// Integrability tensor T(a, b, c) = 2 <<a, [[b, c]]>>_-, a form of degree
// n + 2 - r - s - t.
Form t_d_direct(const GradedPair& a, const GradedPair& b, const GradedPair& c);

// The same tensor expanded through Lie derivatives, valid on isotropic
// triples (graph sections in particular):
//   T(a, b, c) = (-1)^{t(r-1)} [ (-1)^{(r+s)t} d i_{G'} i_{G''} S
//                - (-1)^{s(t-1)} i_{G'} L_G S''
//                - (-1)^{r(s-1)} i_G L_{G''} S'
//                - (-1)^{t(r-1)} i_{G''} L_{G'} S ].
Form t_d_expanded(const GradedPair& a, const GradedPair& b, const GradedPair& c);

// J(a, b, c) = [[a, [[b, c]]]] + (-1)^{(t-1)(r+s)} [[c, [[a, b]]]]
//            + (-1)^{(r-1)(s+t)} [[b, [[c, a]]]].
GradedPair jacobiator(const GradedPair& a, const GradedPair& b, const GradedPair& c);

// d Omega; the graph structure is integrable exactly when this vanishes.
Form closedness_check(const GraphMultiDirac& g);

// Anchor: forget the form part.
Multivector rho_project(const GradedPair& a);

// Full contraction of n + 1 degree-1 graph sections into the last one's
// form part: evaluates to i_{G_1 ^ ... ^ G_n} S_{n+1}, a function. Totally
// antisymmetric when the sections come from one isotropic structure.
Poly omega_from_d1(const std::vector<GradedPair>& sections);

// A tuple of generating sections with every mutual pairing_minus checked to
// vanish.
struct SpannedStructure {
    GradedContext ctx;
    std::vector<GradedPair> generators;
};

// Throws structural_error naming the first offending pair if some
// <<g_i, g_j>>_- is nonzero.
SpannedStructure make_spanned(const GradedContext& ctx,
                              std::vector<GradedPair> generators);

}  // namespace mdx
