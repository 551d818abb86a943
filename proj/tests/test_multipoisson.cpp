#include <doctest.h>

#include "mdx/errors.hpp"
#include "mdx/multipoisson.hpp"

using namespace mdx;

namespace {

struct Plane {
    Chart c = make_chart({"q", "p"});
    GradedContext ctx = make_context(c, 1);
    Poly q = Poly::variable(2, 0);
    Poly p = Poly::variable(2, 1);
    GraphMultiDirac g = make_graph(ctx, wedge(form_basis(c, 0), form_basis(c, 1)));

    AdmissibleForm adm(const Poly& f) {
        Form sigma = form_scalar(c, f);
        auto w = solve_hamiltonian(g, sigma);
        REQUIRE(w.has_value());
        return make_admissible(g, sigma, *w);
    }
};

struct Space {
    Chart c = make_chart({"x", "y", "z"});
    GradedContext ctx = make_context(c, 2);
    Poly x = Poly::variable(3, 0);
    Poly y = Poly::variable(3, 1);
    Poly z = Poly::variable(3, 2);
    GraphMultiDirac g = make_graph(
        ctx, wedge(wedge(form_basis(c, 0), form_basis(c, 1)), form_basis(c, 2)));

    Form dx(int i) { return form_basis(c, i); }
};

}  // namespace

TEST_CASE("canonical bracket of coordinates") {
    Plane P;
    AdmissibleForm Q = P.adm(P.q);
    AdmissibleForm Pm = P.adm(P.p);
    CHECK(Q.grade == 0);
    CHECK(Q.admissible());

    // Witnesses are forced: i_G(dq ^ dp) = dq needs G = -@p, = dp needs @q.
    CHECK(Q.gamma == -mv_basis(P.c, 1));
    CHECK(Pm.gamma == mv_basis(P.c, 0));

    AdmissibleForm qp = poisson_bracket(Q, Pm);
    CHECK(qp.sigma == form_scalar(P.c, Poly::constant(2, -1)));
    CHECK(poisson_bracket(Pm, Q).sigma == form_scalar(P.c, Poly::constant(2, 1)));
    CHECK(poisson_bracket(Q, Q).sigma.is_zero());

    // Polynomial Hamiltonians reproduce the classical bracket
    // {f, g} = df/dp dg/dq - df/dq dg/dp up to the fixed orientation.
    AdmissibleForm H = P.adm(P.q * P.q);
    AdmissibleForm K = P.adm(P.p * P.q);
    Form expect = form_scalar(
        P.c, H.sigma.coefficient(0).partial(1) * K.sigma.coefficient(0).partial(0) -
                 H.sigma.coefficient(0).partial(0) * K.sigma.coefficient(0).partial(1));
    CHECK(poisson_bracket(H, K).sigma == expect);
}

TEST_CASE("frozen one-form bracket over the volume graph") {
    Space S;
    AdmissibleForm A = make_admissible(S.g, S.dx(0).scaled(S.z), mv_basis(S.c, 1));
    AdmissibleForm B = make_admissible(S.g, S.dx(1).scaled(S.x), mv_basis(S.c, 2));
    CHECK(A.admissible());
    CHECK(B.admissible());
    CHECK(A.grade == 0);

    AdmissibleForm br = poisson_bracket(A, B);
    CHECK(br.sigma == -S.dx(0));
    CHECK(br.admissible());
    // [@y, @z] = 0, so the induced witness vanishes.
    CHECK(br.gamma.is_zero());
}

TEST_CASE("solver finds witnesses exactly when the contraction equation has one") {
    Space S;
    auto w = solve_hamiltonian(S.g, S.dx(1).scaled(S.x));
    REQUIRE(w.has_value());
    CHECK(*w == mv_basis(S.c, 2));

    // Ambient degree 1 over three variables: i_G(dx ^ dy) never produces dz.
    GradedContext low = make_context(S.c, 1);
    GraphMultiDirac flat = make_graph(low, wedge(S.dx(0), S.dx(1)));
    CHECK(!solve_hamiltonian(flat, form_scalar(S.c, S.z)).has_value());
    CHECK(solve_hamiltonian(flat, form_scalar(S.c, S.x)).has_value());

    // Witnesses of non-admissible data are rejected with a recorded defect.
    AdmissibleForm bad = make_admissible(flat, form_scalar(S.c, S.z),
                                         mv_zero(S.c, 1));
    CHECK(!bad.admissible());
    CHECK(bad.defect.has_value());
    CHECK(*bad.defect == -ext_deriv(form_scalar(S.c, S.z)));
}

TEST_CASE("kernel of the contraction map") {
    Space S;
    GradedContext low = make_context(S.c, 1);
    GraphMultiDirac flat = make_graph(low, wedge(S.dx(0), S.dx(1)));
    auto ker = hamiltonian_kernel(flat, 1);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == mv_basis(S.c, 2));
    // The volume graph pairs multivectors with forms bijectively.
    CHECK(hamiltonian_kernel(S.g, 1).empty());
    CHECK(hamiltonian_kernel(S.g, 2).empty());
}

TEST_CASE("bracket output does not depend on the witness choice") {
    Chart c = make_chart({"x1", "x2", "x3", "x4"});
    GradedContext ctx = make_context(c, 2);
    Form omega = wedge(wedge(form_basis(c, 0), form_basis(c, 1)), form_basis(c, 2));
    GraphMultiDirac g = make_graph(ctx, omega);
    Poly x1 = Poly::variable(4, 0), x2 = Poly::variable(4, 1);

    Form sa = form_basis(c, 0).scaled(x2 * x2);
    auto wa = solve_hamiltonian(g, sa);
    REQUIRE(wa.has_value());
    AdmissibleForm A = make_admissible(g, sa, *wa);

    Form sb = form_basis(c, 2).scaled(x1);
    auto wb = solve_hamiltonian(g, sb);
    REQUIRE(wb.has_value());
    AdmissibleForm B = make_admissible(g, sb, *wb);

    auto kernel = hamiltonian_kernel(g, 1);
    REQUIRE(!kernel.empty());
    AdmissibleForm B2 = make_admissible(g, sb, B.gamma + kernel[0].scaled(x1 * x2));
    CHECK(B2.admissible());
    AdmissibleForm A2 = make_admissible(g, sa, A.gamma + kernel[0]);
    CHECK(A2.admissible());

    CHECK(poisson_bracket(A, B).sigma == poisson_bracket(A2, B2).sigma);
    CHECK(poisson_bracket(B, A).sigma == poisson_bracket(B2, A2).sigma);
}

TEST_CASE("grades add inside the band and the bracket dies past it") {
    Space S;
    AdmissibleForm f = make_admissible(S.g, form_scalar(S.c, S.x * S.y),
                                       *solve_hamiltonian(S.g, form_scalar(S.c, S.x * S.y)));
    CHECK(f.grade == 1);
    AdmissibleForm a = make_admissible(S.g, S.dx(0).scaled(S.z),
                                       mv_basis(S.c, 1));
    AdmissibleForm fa = poisson_bracket(a, f);
    CHECK(fa.grade == 1);
    CHECK(fa.sigma.degree() == 0);

    // grade 1 + grade 1 exceeds n - 1 = 1.
    CHECK(poisson_bracket(f, f).sigma.is_zero());
    CHECK(poisson_bracket(f, f).gamma.is_zero());
}

TEST_CASE("exact forms are admissible with zero witness and are central") {
    Space S;
    Form tau = form_scalar(S.c, S.x * S.z);
    AdmissibleForm E = make_admissible(S.g, ext_deriv(tau), mv_zero(S.c, 1));
    CHECK(E.admissible());

    AdmissibleForm a = make_admissible(S.g, S.dx(1).scaled(S.x), mv_basis(S.c, 2));
    CHECK(poisson_bracket(a, E).sigma.is_zero());
    // The other order contracts d d tau = 0.
    CHECK(poisson_bracket(E, a).sigma.is_zero());
}

TEST_CASE("bracket of differentials is the differential of the bracket") {
    Space S;
    AdmissibleForm A = make_admissible(S.g, S.dx(0).scaled(S.z * S.z),
                                       *solve_hamiltonian(S.g, S.dx(0).scaled(S.z * S.z)));
    AdmissibleForm B = make_admissible(S.g, S.dx(1).scaled(S.x * S.y),
                                       *solve_hamiltonian(S.g, S.dx(1).scaled(S.x * S.y)));
    int k = A.grade, l = B.grade;
    GradedPair da = make_pair(S.ctx, A.gamma, ext_deriv(A.sigma));
    GradedPair db = make_pair(S.ctx, B.gamma, ext_deriv(B.sigma));
    GradedPair mc = multi_courant(da, db);
    CHECK(mc.gamma == schouten(A.gamma, B.gamma));
    CHECK(mc.sigma ==
          ext_deriv(poisson_bracket(A, B).sigma).scaled(make_rational(parity_sign(k + l))));
}

TEST_CASE("graded jacobi at matching parity and the obstruction across parities") {
    Space S;

    // Matching parity: three grade-0 one-forms, defect identically zero.
    AdmissibleForm A0 = make_admissible(S.g, S.dx(0).scaled(S.z), mv_basis(S.c, 1));
    AdmissibleForm B0 = make_admissible(S.g, S.dx(1).scaled(S.x), mv_basis(S.c, 2));
    AdmissibleForm C0 = make_admissible(S.g, S.dx(2).scaled(S.x * S.y),
                                        *solve_hamiltonian(S.g, S.dx(2).scaled(S.x * S.y)));
    CHECK(jacobi_defect(A0, B0, C0).is_zero());

    // Mixed parity (0, 0, 1): a frozen counterexample where the cyclic sum
    // is a nonzero constant while the single exact correction term vanishes.
    Poly h = Poly::constant(3, make_rational(1, 2));
    AdmissibleForm A = make_admissible(
        S.g, S.dx(0).scaled(Poly::constant(3, 3)) + S.dx(2).scaled(S.y.scaled(make_rational(1, 2))),
        mv_basis(S.c, 0).scaled(h));
    AdmissibleForm B = make_admissible(
        S.g,
        S.dx(0).scaled(Poly::constant(3, make_rational(-2, 3)) +
                       (S.y * S.z).scaled(make_rational(-1, 3))) +
            S.dx(2).scaled((S.x * S.z).scaled(-2) - S.x * S.y),
        mv_basis(S.c, 0).scaled(-S.x) +
            mv_basis(S.c, 1).scaled(S.z.scaled(2) + S.y.scaled(make_rational(2, 3))) +
            mv_basis(S.c, 2).scaled(S.z.scaled(make_rational(1, 3))));
    AdmissibleForm C = make_admissible(
        S.g,
        form_scalar(S.c, (S.y * S.z).scaled(make_rational(-2, 3)) +
                             S.x.scaled(make_rational(-2, 3))),
        wedge(mv_basis(S.c, 0), mv_basis(S.c, 1)).scaled(S.y.scaled(make_rational(-2, 3))) +
            wedge(mv_basis(S.c, 0), mv_basis(S.c, 2)).scaled(S.z.scaled(make_rational(2, 3))) +
            wedge(mv_basis(S.c, 1), mv_basis(S.c, 2)).scaled(Poly::constant(3, make_rational(-2, 3))));
    REQUIRE(A.admissible());
    REQUIRE(B.admissible());
    REQUIRE(C.admissible());
    REQUIRE(A.grade == 0);
    REQUIRE(C.grade == 1);

    CHECK(poisson_bracket(poisson_bracket(A, B), C).sigma ==
          form_scalar(S.c, Poly::constant(3, make_rational(-1, 3))));
    CHECK(poisson_bracket(poisson_bracket(B, C), A).sigma ==
          form_scalar(S.c, Poly::constant(3, make_rational(-1, 3))));
    CHECK(poisson_bracket(poisson_bracket(C, A), B).sigma.is_zero());

    Form defect = jacobi_defect(A, B, C);
    CHECK(defect == form_scalar(S.c, Poly::constant(3, make_rational(-2, 3))));

    // The defect is exactly the parity obstruction: each grade pair of
    // opposite parity contributes one double contraction of the ambient form
    // against a Schouten bracket of witnesses.
    auto obstruction = [&](const AdmissibleForm& P, const AdmissibleForm& Q,
                           const AdmissibleForm& R) {
        int k = P.grade, l = Q.grade, m = R.grade;
        Form xp = contract(P.gamma, contract(schouten(Q.gamma, R.gamma), S.g.omega));
        Form xq = contract(Q.gamma, contract(schouten(R.gamma, P.gamma), S.g.omega));
        Form xr = contract(R.gamma, contract(schouten(P.gamma, Q.gamma), S.g.omega));
        auto w = [](int pair_sum, int prod) {
            return make_rational(-static_cast<long long>(parity_sign(prod)) *
                                 (1 - parity_sign(pair_sum)));
        };
        return xr.scaled(w(k + l, k * m)) + xp.scaled(w(l + m, l * k)) +
               xq.scaled(w(k + m, m * l));
    };
    CHECK(defect == obstruction(A, B, C));

    Form permuted = jacobi_defect(C, A, B);
    CHECK(!permuted.is_zero());
    CHECK(permuted == obstruction(C, A, B));
}

TEST_CASE("mismatched graphs are rejected") {
    Plane P;
    Space S;
    AdmissibleForm a = P.adm(P.q);
    AdmissibleForm b = make_admissible(S.g, S.dx(0).scaled(S.z), mv_basis(S.c, 1));
    CHECK_THROWS_AS(poisson_bracket(a, b), structural_error);
}
