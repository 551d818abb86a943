#include <doctest.h>

#include "mdx/homotopy.hpp"

using namespace mdx;

namespace {

Chart chart3() { return make_chart({"x", "y", "z"}); }

}  // namespace

TEST_CASE("monomial primitives") {
    Chart c = chart3();
    Poly x = Poly::variable(3, 0);
    Poly y = Poly::variable(3, 1);

    // h(x^2 dx) = x^3 / 3.
    Form a = form_basis(c, 0).scaled(x * x);
    CHECK(homotopy_primitive(a) ==
          form_scalar(c, (x * x * x).scaled(make_rational(1, 3))));

    // h(dx ^ dy) = (x dy - y dx) / 2.
    Form vol2 = wedge(form_basis(c, 0), form_basis(c, 1));
    Form expect = form_basis(c, 1).scaled(x.scaled(make_rational(1, 2))) -
                  form_basis(c, 0).scaled(y.scaled(make_rational(1, 2)));
    CHECK(homotopy_primitive(vol2) == expect);
}

TEST_CASE("homotopy identity in positive degree") {
    Chart c = chart3();
    Poly x = Poly::variable(3, 0);
    Poly y = Poly::variable(3, 1);
    Poly z = Poly::variable(3, 2);

    std::vector<Form> samples = {
        form_basis(c, 0).scaled(z * z) + form_basis(c, 2).scaled(x * y),
        wedge(form_basis(c, 0), form_basis(c, 1)).scaled(x + z) -
            wedge(form_basis(c, 1), form_basis(c, 2)).scaled(y * y * x),
        wedge(wedge(form_basis(c, 0), form_basis(c, 1)), form_basis(c, 2))
            .scaled(Poly::constant(3, 5) + x * x),
    };
    for (const Form& a : samples) {
        Form reassembled =
            ext_deriv(homotopy_primitive(a)) + homotopy_primitive(ext_deriv(a));
        CHECK(reassembled == a);
    }
}

TEST_CASE("primitives of closed forms") {
    Chart c = chart3();
    Poly x = Poly::variable(3, 0);
    Poly y = Poly::variable(3, 1);
    Poly z = Poly::variable(3, 2);

    // Closed but not written as a differential: d recovers the input.
    Form closed = wedge(form_basis(c, 1), form_basis(c, 2)).scaled(x) +
                  wedge(form_basis(c, 2), form_basis(c, 0)).scaled(y) -
                  wedge(form_basis(c, 0), form_basis(c, 1)).scaled(z.scaled(2));
    REQUIRE(ext_deriv(closed).is_zero());
    CHECK(ext_deriv(homotopy_primitive(closed)) == closed);

    // Exact forms round-trip through d h d.
    Form tau = form_basis(c, 1).scaled(x * x * z);
    CHECK(ext_deriv(homotopy_primitive(ext_deriv(tau))) == ext_deriv(tau));

    // A non-closed form is not recovered; the gap is h(d a).
    Form open_form = form_basis(c, 1).scaled(x);
    CHECK(ext_deriv(homotopy_primitive(open_form)) != open_form);
}
