#pragma once

#include "mdx/exterior.hpp"

#include <map>

namespace mdx {

// Ambient data for the graded bundle over a chart Z: component r pairs a
// degree-r multivector with a form of degree n + 1 - r, for r = 1 .. n.
struct GradedContext {
    Chart chart;
    int n;
    bool operator==(const GradedContext& o) const = default;
};

GradedContext make_context(Chart chart, int n);

// One homogeneous section (Gamma, Sigma) of degree r.
struct GradedPair {
    GradedContext ctx;
    int r;
    Multivector gamma;
    Form sigma;
    bool is_zero() const { return gamma.is_zero() && sigma.is_zero(); }
    bool operator==(const GradedPair& o) const = default;
};

GradedPair make_pair(const GradedContext& ctx, Multivector gamma, Form sigma);
GradedPair pair_zero(const GradedContext& ctx, int r);
GradedPair pair_add(const GradedPair& a, const GradedPair& b);
GradedPair pair_neg(const GradedPair& a);
GradedPair pair_scaled(const GradedPair& a, const Rational& c);

// <<a, b>>_- = (1/2)(i_{G'} S - (-1)^{rs} i_G S'), graded antisymmetric.
// <<a, b>>_+ = (1/2)(i_{G'} S + (-1)^{rs} i_G S'), graded symmetric.
// Both vanish by degree when r + s > n + 1.
Form pairing_minus(const GradedPair& a, const GradedPair& b);
Form pairing_plus(const GradedPair& a, const GradedPair& b);

// (G, S) . (G', S') = (G ^ G', <<a, b>>_+), zero when r + s > n.
GradedPair section_wedge(const GradedPair& a, const GradedPair& b);

// [[a, b]] = ([G, G'],
//   (-1)^{(r-1)s} L_G S' + (-1)^s L_{G'} S - (-1)^s d <<a, b>>_+),
// zero when r + s > n + 1.
GradedPair multi_courant(const GradedPair& a, const GradedPair& b);

// Gauge map of an (n+1)-form: (G, S) -> (G, S + i_G sigma).
GradedPair gauge_transform(const Form& sigma, const GradedPair& a);

// Inhomogeneous section: finite sum of homogeneous components keyed by
// degree, zero components dropped.
class Section {
  public:
    explicit Section(GradedContext ctx) : ctx_(std::move(ctx)) {}
    explicit Section(const GradedPair& a);

    const GradedContext& ctx() const { return ctx_; }
    const std::map<int, GradedPair>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }
    bool is_homogeneous() const { return comps_.size() <= 1; }
    // The unique component when homogeneous; zero of degree 1 when empty.
    GradedPair sole_component() const;
    void add_component(const GradedPair& a);

    bool operator==(const Section& o) const = default;

  private:
    GradedContext ctx_;
    std::map<int, GradedPair> comps_;
};

Section section_add(const Section& a, const Section& b);
Section section_neg(const Section& a);
Section section_scaled(const Section& a, const Rational& c);
Section section_wedge(const Section& a, const Section& b);
Section multi_courant(const Section& a, const Section& b);
Section gauge_transform(const Form& sigma, const Section& a);
// Bilinear extensions of the pairings collect one form per result degree.
std::map<int, Form> pairing_minus(const Section& a, const Section& b);
std::map<int, Form> pairing_plus(const Section& a, const Section& b);

}  // namespace mdx
