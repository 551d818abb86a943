#include "mdx/poly.hpp"

#include "mdx/errors.hpp"

namespace mdx {

Poly::Poly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw structural_error("polynomial needs a nonnegative variable count");
}

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Mono(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw structural_error("variable index out of range");
    Mono m(nvars, 0);
    m[index] = 1;
    return monomial(nvars, m, Rational(1));
}

Poly Poly::monomial(int nvars, const Mono& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars)
        throw structural_error("monomial exponent vector has wrong length");
    Poly p(nvars);
    p.add_term(exps, c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Mono(nvars_, 0);
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw structural_error("polynomial is not constant");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (auto e : m) d += e;
        if (d > deg) deg = d;
    }
    return deg;
}

void Poly::add_term(const Mono& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw structural_error("monomial exponent vector has wrong length");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_) throw structural_error("polynomial variable counts differ");
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly Poly::scaled(const Rational& c) const {
    Poly out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw structural_error("polynomial variable counts differ");
    Poly out(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono m(nvars_);
            for (int i = 0; i < nvars_; ++i) {
                int e = ma[i] + mb[i];
                if (e > 255) throw structural_error("monomial exponent overflow");
                m[i] = static_cast<std::uint8_t>(e);
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly Poly::partial(int index) const {
    if (index < 0 || index >= nvars_)
        throw structural_error("variable index out of range");
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[index] == 0) continue;
        Mono d = m;
        d[index] -= 1;
        out.add_term(d, c * Rational(static_cast<int>(m[index])));
    }
    return out;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        // Powers print as repeated factors so the result reparses in a
        // grammar where "^" means wedge, not exponentiation.
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            for (int e = 0; e < m[i]; ++e) {
                if (!vars.empty()) vars += "*";
                vars += names.at(i);
            }
        }
        if (vars.empty()) {
            out += rational_str(a);
        } else if (a == 1) {
            out += vars;
        } else {
            out += rational_str(a) + "*" + vars;
        }
    }
    return out;
}

}  // namespace mdx
