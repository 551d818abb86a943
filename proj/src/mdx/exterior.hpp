#pragma once

#include "mdx/poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mdx {

// A coordinate chart: an ordered list of distinct variable names. Everything
// downstream lives over one chart; mixing charts is a structural error.
struct Chart {
    std::vector<std::string> names;
    int dim() const { return static_cast<int>(names.size()); }
    bool operator==(const Chart& o) const = default;
};

Chart make_chart(std::vector<std::string> names);

// Index sets of basis blades are bitmasks: bit i set means variable i is a
// factor. Factors are always taken in ascending index order; reordering
// parity is absorbed into the polynomial coefficient when terms are built.
using Blade = std::uint64_t;

// Sign (-1)^e for any integer e, negatives included.
inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

// Parity of the number of set bits of `mask` strictly below position `j`,
// as a sign: +1 for even, -1 for odd.
int below_sign(int j, Blade mask);

// Sign of reordering the concatenation (a, b) into ascending order, or 0
// when the blades share an index.
int merge_sign(Blade a, Blade b);

namespace detail {
template <typename Tag>
class GradedElement {
  public:
    GradedElement(Chart chart, int degree);

    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Blade, Poly>& terms() const { return terms_; }
    // Adds c * blade, folding into canonical form; popcount(blade) must
    // equal the element's degree.
    void add_term(Blade blade, const Poly& c);
    Poly coefficient(Blade blade) const;

    GradedElement operator+(const GradedElement& o) const;
    GradedElement operator-(const GradedElement& o) const;
    GradedElement operator-() const;
    GradedElement scaled(const Poly& c) const;
    GradedElement scaled(const Rational& c) const;

    bool operator==(const GradedElement& o) const = default;

  private:
    Chart chart_;
    int degree_;
    std::map<Blade, Poly> terms_;
};
}  // namespace detail

// Multivector field: polynomial combination of wedge products of coordinate
// vector fields. Form: same over coordinate differentials. Degree 0 of
// either kind is a plain polynomial in disguise.
using Multivector = detail::GradedElement<struct mv_tag>;
using Form = detail::GradedElement<struct form_tag>;

// Degrees outside [0, dim] only arise as results of degree-lowering or
// -raising operations on inputs where the result must vanish; they are
// represented by the canonical zero of the clamped degree.
int clamp_degree(int degree, const Chart& chart);

Multivector mv_zero(const Chart& chart, int degree);
Multivector mv_scalar(const Chart& chart, const Poly& f);
Multivector mv_basis(const Chart& chart, int index);
Multivector mv_blade(const Chart& chart, Blade blade, const Poly& c);
Form form_zero(const Chart& chart, int degree);
Form form_scalar(const Chart& chart, const Poly& f);
Form form_basis(const Chart& chart, int index);
Form form_blade(const Chart& chart, Blade blade, const Poly& c);

Multivector wedge(const Multivector& a, const Multivector& b);
Form wedge(const Form& a, const Form& b);

// Interior product i_G a. For a decomposable G = X_1 ^ ... ^ X_k the factors
// contract innermost-first: i_G a = i_{X_k} ... i_{X_1} a, equivalently
// (i_G a)(u_1, ...) = a(X_1, ..., X_k, u_1, ...). Zero when deg G > deg a.
Form contract(const Multivector& gamma, const Form& alpha);

// Interior product of a 1-form against a multivector, by the mirror rule
// i_{dx_j} (e_{i_1} ^ ... ^ e_{i_k}) = sum over i_m = j of (-1)^{m-1} e_{I \ j}.
Multivector contract_one_form(const Form& alpha, const Multivector& gamma);

Form ext_deriv(const Form& alpha);

// Cartan formula, k = deg G: L_G a = d(i_G a) - (-1)^k i_G(d a).
Form lie_derivative(const Multivector& gamma, const Form& alpha);

// Schouten bracket of multivector fields, degree k + l - 1. Expanded per
// term pair as
//   [f e_I, g e_J] = (-1)^{k-1} f (i_{dg} e_I) ^ e_J
//                    - (-1)^{(l-1) k} g (i_{df} e_J) ^ e_I
// which restricts to the Lie bracket on vector fields and to X(g) for a
// vector field against a function.
Multivector schouten(const Multivector& a, const Multivector& b);

}  // namespace mdx
