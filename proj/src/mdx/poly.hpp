#pragma once

#include "mdx/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mdx {

// Exponent vector of a monomial; entry i is the power of variable i.
using Mono = std::vector<std::uint8_t>;

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed number of variables. Terms are kept in a map ordered by exponent
// vector, zero coefficients are never stored, so equal polynomials are
// structurally equal.
class Poly {
  public:
    explicit Poly(int nvars);
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int index);
    static Poly monomial(int nvars, const Mono& exps, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The coefficient of the empty monomial; requires is_constant().
    Rational constant_value() const;
    int total_degree() const;

    const std::map<Mono, Rational>& terms() const { return terms_; }
    void add_term(const Mono& exps, const Rational& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rational& c) const;
    Poly partial(int index) const;

    bool operator==(const Poly& o) const = default;

    std::string str(const std::vector<std::string>& names) const;

  private:
    int nvars_;
    std::map<Mono, Rational> terms_;
};

}  // namespace mdx
