#include "mdx/eval.hpp"

#include "mdx/errors.hpp"
#include "mdx/homotopy.hpp"

namespace mdx {

namespace {

bool value_is_zero(const Value& v) {
    if (const auto* a = std::get_if<AdmissibleForm>(&v))
        return a->sigma.is_zero() && a->gamma.is_zero();
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, AdmissibleForm>)
                return false;
            else
                return x.is_zero();
        },
        v);
}

Poly poly_of_scalar(const Value& v) {
    if (const auto* p = std::get_if<Poly>(&v)) return *p;
    if (const auto* m = std::get_if<Multivector>(&v)) {
        if (m->degree() == 0) return m->coefficient(0);
    }
    if (const auto* f = std::get_if<Form>(&v)) {
        if (f->degree() == 0) return f->coefficient(0);
    }
    throw structural_error("expected a scalar");
}

bool is_scalar(const Value& v) {
    if (std::holds_alternative<Poly>(v)) return true;
    if (const auto* m = std::get_if<Multivector>(&v)) return m->degree() == 0;
    if (const auto* f = std::get_if<Form>(&v)) return f->degree() == 0;
    return false;
}

}  // namespace

std::string value_str(const Chart& chart, const Value& v) {
    if (const auto* p = std::get_if<Poly>(&v)) return poly_str(chart, *p);
    if (const auto* m = std::get_if<Multivector>(&v)) return mv_str(*m);
    if (const auto* f = std::get_if<Form>(&v)) return form_str(*f);
    if (const auto* s = std::get_if<Section>(&v)) return section_str(*s);
    return admissible_str(std::get<AdmissibleForm>(v));
}

bool value_equal(const Value& a, const Value& b) {
    if (value_is_zero(a) && value_is_zero(b)) return true;
    if (is_scalar(a) && is_scalar(b)) return poly_of_scalar(a) == poly_of_scalar(b);
    if (a.index() != b.index()) return false;
    if (const auto* m = std::get_if<Multivector>(&a))
        return *m == std::get<Multivector>(b);
    if (const auto* f = std::get_if<Form>(&a)) return *f == std::get<Form>(b);
    if (const auto* s = std::get_if<Section>(&a)) return *s == std::get<Section>(b);
    if (const auto* ad = std::get_if<AdmissibleForm>(&a)) {
        const auto& bd = std::get<AdmissibleForm>(b);
        return ad->parent == bd.parent && ad->sigma == bd.sigma && ad->gamma == bd.gamma;
    }
    return false;
}

const Chart& Session::need_chart() const {
    if (!chart_) throw structural_error("no chart declared");
    return *chart_;
}

const GradedContext& Session::need_context() {
    if (!ctx_) {
        if (!chart_) throw structural_error("no chart declared");
        if (!ambient_) throw structural_error("no ambient degree declared");
        ctx_ = make_context(*chart_, *ambient_);
    }
    return *ctx_;
}

const GraphMultiDirac& Session::need_graph() {
    if (!graph_) throw structural_error("no graph declared");
    return *graph_;
}

namespace {

// Promotions used by the arithmetic cases below.

Multivector as_mv(const Chart& chart, const Value& v) {
    if (const auto* m = std::get_if<Multivector>(&v)) return *m;
    if (const auto* p = std::get_if<Poly>(&v)) return mv_scalar(chart, *p);
    throw structural_error("expected a multivector");
}

Form as_form(const Chart& chart, const Value& v) {
    if (const auto* f = std::get_if<Form>(&v)) return *f;
    if (const auto* p = std::get_if<Poly>(&v)) return form_scalar(chart, *p);
    throw structural_error("expected a form");
}

Section as_section(const Value& v) {
    if (const auto* s = std::get_if<Section>(&v)) return *s;
    throw structural_error("expected a section pair");
}

Value add_values(const Chart& chart, const Value& a, const Value& b) {
    if (std::holds_alternative<Section>(a) || std::holds_alternative<Section>(b))
        return section_add(as_section(a), as_section(b));
    if (std::holds_alternative<Poly>(a) && std::holds_alternative<Poly>(b))
        return std::get<Poly>(a) + std::get<Poly>(b);
    if (std::holds_alternative<Multivector>(a) || std::holds_alternative<Multivector>(b))
        return as_mv(chart, a) + as_mv(chart, b);
    if (std::holds_alternative<Form>(a) || std::holds_alternative<Form>(b))
        return as_form(chart, a) + as_form(chart, b);
    throw structural_error("cannot add these values");
}

Value neg_value(const Value& v) {
    if (const auto* p = std::get_if<Poly>(&v)) return -*p;
    if (const auto* m = std::get_if<Multivector>(&v)) return -*m;
    if (const auto* f = std::get_if<Form>(&v)) return -*f;
    if (const auto* s = std::get_if<Section>(&v)) return section_neg(*s);
    throw structural_error("cannot negate this value");
}

Value mul_values(const Chart& chart, const Value& a, const Value& b) {
    if (is_scalar(a) && std::holds_alternative<Poly>(b))
        return poly_of_scalar(a) * std::get<Poly>(b);
    if (is_scalar(a)) {
        Poly f = poly_of_scalar(a);
        if (const auto* m = std::get_if<Multivector>(&b)) return m->scaled(f);
        if (const auto* fo = std::get_if<Form>(&b)) return fo->scaled(f);
        if (const auto* s = std::get_if<Section>(&b)) {
            if (!f.is_constant())
                throw structural_error("sections scale by constants only");
            return section_scaled(*s, f.constant_value());
        }
    }
    if (is_scalar(b)) return mul_values(chart, b, a);
    throw structural_error("'*' needs a scalar operand; use '^' for products of graded elements");
}

Value wedge_values(const Chart& chart, const Value& a, const Value& b) {
    if (std::holds_alternative<Section>(a) && std::holds_alternative<Section>(b))
        return section_wedge(std::get<Section>(a), std::get<Section>(b));
    if (is_scalar(a) || is_scalar(b)) return mul_values(chart, a, b);
    if (std::holds_alternative<Multivector>(a) && std::holds_alternative<Multivector>(b))
        return wedge(std::get<Multivector>(a), std::get<Multivector>(b));
    if (std::holds_alternative<Form>(a) && std::holds_alternative<Form>(b))
        return wedge(std::get<Form>(a), std::get<Form>(b));
    throw structural_error("cannot wedge a form with a multivector");
}

}  // namespace

Value Session::call(const Expr& e) {
    const std::string& fn = e.name;
    auto arity = [&](size_t lo, size_t hi) {
        if (e.args.size() < lo || e.args.size() > hi)
            throw structural_error(fn + ": wrong number of arguments");
    };
    std::vector<Value> args;
    args.reserve(e.args.size());
    for (const auto& a : e.args) args.push_back(eval(a));
    const Chart& chart = need_chart();

    if (fn == "d") {
        arity(1, 1);
        return ext_deriv(as_form(chart, args[0]));
    }
    if (fn == "i") {
        arity(2, 2);
        if (std::holds_alternative<Form>(args[0]) &&
            std::holds_alternative<Multivector>(args[1]))
            return contract_one_form(std::get<Form>(args[0]),
                                     std::get<Multivector>(args[1]));
        return contract(as_mv(chart, args[0]), as_form(chart, args[1]));
    }
    if (fn == "L") {
        arity(2, 2);
        return lie_derivative(as_mv(chart, args[0]), as_form(chart, args[1]));
    }
    if (fn == "sn") {
        arity(2, 2);
        return schouten(as_mv(chart, args[0]), as_mv(chart, args[1]));
    }
    if (fn == "pair") {
        arity(2, 2);
        const GradedContext& ctx = need_context();
        Multivector g = as_mv(chart, args[0]);
        Form s = as_form(chart, args[1]);
        if (g.is_zero() && s.is_zero()) return Section(ctx);
        if (g.is_zero())
            g = mv_zero(chart, ctx.n + 1 - s.degree());
        else if (s.is_zero())
            s = form_zero(chart, ctx.n + 1 - g.degree());
        return Section(make_pair(ctx, std::move(g), std::move(s)));
    }
    if (fn == "pairm" || fn == "pairp") {
        arity(2, 2);
        GradedPair a = as_section(args[0]).sole_component();
        GradedPair b = as_section(args[1]).sole_component();
        return fn == "pairm" ? pairing_minus(a, b) : pairing_plus(a, b);
    }
    if (fn == "cb") {
        arity(2, 2);
        return multi_courant(as_section(args[0]), as_section(args[1]));
    }
    if (fn == "phi") {
        arity(2, 2);
        return gauge_transform(as_form(chart, args[0]), as_section(args[1]));
    }
    if (fn == "td") {
        arity(3, 3);
        return t_d_direct(as_section(args[0]).sole_component(),
                          as_section(args[1]).sole_component(),
                          as_section(args[2]).sole_component());
    }
    if (fn == "jac") {
        arity(3, 3);
        return Section(jacobiator(as_section(args[0]).sole_component(),
                                  as_section(args[1]).sole_component(),
                                  as_section(args[2]).sole_component()));
    }
    if (fn == "emb") {
        arity(1, 1);
        const GraphMultiDirac& g = need_graph();
        return Section(graph_embed(g, as_mv(chart, args[0])).as_pair());
    }
    if (fn == "adm") {
        arity(1, 2);
        const GraphMultiDirac& g = need_graph();
        Form sigma = as_form(chart, args[0]);
        if (e.args.size() == 2)
            return make_admissible(g, std::move(sigma), as_mv(chart, args[1]));
        auto witness = solve_hamiltonian(g, sigma);
        if (!witness)
            throw structural_error("adm: the form has no witness, it is not admissible");
        return make_admissible(g, std::move(sigma), std::move(*witness));
    }
    if (fn == "pb") {
        arity(2, 2);
        const auto* a = std::get_if<AdmissibleForm>(&args[0]);
        const auto* b = std::get_if<AdmissibleForm>(&args[1]);
        if (!a || !b) throw structural_error("pb: expected admissible forms");
        return poisson_bracket(*a, *b);
    }
    throw structural_error("unknown function " + fn);
}

Value Session::eval(const ExprPtr& eptr) {
    const Expr& e = *eptr;
    switch (e.kind) {
        case Expr::Kind::Number: {
            const Chart& chart = need_chart();
            return Poly::constant(chart.dim(), e.number);
        }
        case Expr::Kind::Ident: {
            auto it = bindings_.find(e.name);
            if (it != bindings_.end()) return it->second;
            const Chart& chart = need_chart();
            for (int v = 0; v < chart.dim(); ++v)
                if (chart.names[v] == e.name) return Poly::variable(chart.dim(), v);
            if (e.name.size() > 1 && e.name[0] == 'd') {
                std::string rest = e.name.substr(1);
                for (int v = 0; v < chart.dim(); ++v)
                    if (chart.names[v] == rest) return form_basis(chart, v);
            }
            throw structural_error("unknown name " + e.name);
        }
        case Expr::Kind::Basis: {
            const Chart& chart = need_chart();
            for (int v = 0; v < chart.dim(); ++v)
                if (chart.names[v] == e.name) return mv_basis(chart, v);
            throw structural_error("unknown chart variable " + e.name);
        }
        case Expr::Kind::Neg:
            return neg_value(eval(e.args[0]));
        case Expr::Kind::Add:
            return add_values(need_chart(), eval(e.args[0]), eval(e.args[1]));
        case Expr::Kind::Sub:
            return add_values(need_chart(), eval(e.args[0]), neg_value(eval(e.args[1])));
        case Expr::Kind::Mul:
            return mul_values(need_chart(), eval(e.args[0]), eval(e.args[1]));
        case Expr::Kind::Wedge:
            return wedge_values(need_chart(), eval(e.args[0]), eval(e.args[1]));
        case Expr::Kind::Call:
            return call(e);
    }
    throw structural_error("unreachable expression kind");
}

std::string Session::run(const Script& script) {
    std::string out;
    for (const Statement& st : script) {
        switch (st.kind) {
            case Statement::Kind::Chart: {
                for (const auto& n : st.names) {
                    if (reserved_word(n))
                        throw structural_error("chart variable " + n + " is a reserved word");
                    if (n.size() > 1 && n[0] == 'd')
                        throw structural_error(
                            "chart variable " + n + " collides with 1-form spelling");
                }
                chart_ = make_chart(st.names);
                ctx_.reset();
                graph_.reset();
                bindings_.clear();
                break;
            }
            case Statement::Kind::Ambient: {
                ambient_ = st.number;
                ctx_.reset();
                graph_.reset();
                break;
            }
            case Statement::Kind::Graph: {
                const GradedContext& ctx = need_context();
                Form omega = as_form(ctx.chart, eval(st.a));
                graph_ = make_graph(ctx, std::move(omega));
                break;
            }
            case Statement::Kind::Let: {
                if (reserved_word(st.names[0]))
                    throw structural_error("let target " + st.names[0] + " is a reserved word");
                bindings_.insert_or_assign(st.names[0], eval(st.a));
                break;
            }
            case Statement::Kind::Assert: {
                Value lhs = eval(st.a);
                Value rhs = eval(st.b);
                if (!value_equal(lhs, rhs)) {
                    const Chart& chart = need_chart();
                    throw assertion_failure(
                        "assertion failed at line " + std::to_string(st.line) +
                        ":\n  left:  " + value_str(chart, lhs) +
                        "\n  right: " + value_str(chart, rhs));
                }
                break;
            }
            case Statement::Kind::Print:
            case Statement::Kind::ExprOnly: {
                Value v = eval(st.a);
                out += value_str(need_chart(), v) + "\n";
                break;
            }
        }
    }
    return out;
}

std::string Session::run_source(const std::string& source) {
    return run(parse_script(source));
}

}  // namespace mdx
