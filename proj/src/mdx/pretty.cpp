#include "mdx/pretty.hpp"

#include <bit>

namespace mdx {

namespace {

// Splits a coefficient into a sign usable for " + " / " - " joining and the
// unsigned rendering. Multi-term polynomials stay parenthesized and count
// as positive.
struct Rendered {
    bool negative;
    std::string text;  // without sign; "1" allowed
};

Rendered render_coeff(const Chart& chart, const Poly& p) {
    if (p.terms().size() == 1) {
        const auto& [mono, coeff] = *p.terms().begin();
        Poly abs = Poly::monomial(p.nvars(), mono, coeff < 0 ? -coeff : coeff);
        return Rendered{coeff < 0, abs.str(chart.names)};
    }
    return Rendered{false, "(" + p.str(chart.names) + ")"};
}

std::string blade_str(const Chart& chart, Blade blade, const char* prefix) {
    std::string out;
    Blade rest = blade;
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        if (!out.empty()) out += "^";
        out += prefix + chart.names.at(j);
    }
    return out;
}

template <typename Elem>
std::string graded_str(const Elem& e, const char* prefix) {
    if (e.is_zero()) return "0";
    const Chart& chart = e.chart();
    std::string out;
    bool first = true;
    for (const auto& [blade, coeff] : e.terms()) {
        Rendered r = render_coeff(chart, coeff);
        if (first) {
            if (r.negative) out += "-";
        } else {
            out += r.negative ? " - " : " + ";
        }
        first = false;
        std::string b = blade_str(chart, blade, prefix);
        if (b.empty())
            out += r.text;
        else if (r.text == "1")
            out += b;
        else
            out += r.text + "*" + b;
    }
    return out;
}

}  // namespace

std::string poly_str(const Chart& chart, const Poly& p) { return p.str(chart.names); }

std::string mv_str(const Multivector& v) { return graded_str(v, "@"); }

std::string form_str(const Form& f) { return graded_str(f, "d"); }

std::string pair_str(const GradedPair& p) {
    return "pair(" + mv_str(p.gamma) + "; " + form_str(p.sigma) + ")";
}

std::string section_str(const Section& s) {
    if (s.is_zero()) return "pair(0; 0)";
    std::string out;
    for (const auto& [r, p] : s.components()) {
        if (!out.empty()) out += " + ";
        out += pair_str(p);
    }
    return out;
}

std::string admissible_str(const AdmissibleForm& a) {
    std::string out = "adm(" + form_str(a.sigma) + "; " + mv_str(a.gamma) + ")";
    if (!a.admissible()) out += " [defect " + form_str(*a.defect) + "]";
    return out;
}

}  // namespace mdx
