#pragma once

#include "mdx/multipoisson.hpp"
#include "mdx/parser.hpp"
#include "mdx/pretty.hpp"

#include <optional>
#include <string>
#include <variant>

namespace mdx {

using Value = std::variant<Poly, Multivector, Form, Section, AdmissibleForm>;

// Raised when an assert statement fails; carries both printed sides.
struct assertion_failure : std::runtime_error {
    explicit assertion_failure(const std::string& msg) : std::runtime_error(msg) {}
};

std::string value_str(const Chart& chart, const Value& v);

// Equality up to representation: scalars compare against degree-0 elements,
// and degree-clamped zeros equal every zero.
bool value_equal(const Value& a, const Value& b);

// Holds the chart, the ambient degree, the optional ambient form, and the
// let bindings of one script or interactive session.
class Session {
  public:
    // Runs statements, appending printed output; assertion failures and
    // structural problems surface as exceptions.
    std::string run(const Script& script);
    std::string run_source(const std::string& source);

    Value eval(const ExprPtr& e);
    const std::optional<GradedContext>& context() const { return ctx_; }
    const std::optional<GraphMultiDirac>& graph() const { return graph_; }

  private:
    std::optional<Chart> chart_;
    std::optional<int> ambient_;
    std::optional<GraphMultiDirac> graph_;
    std::optional<GradedContext> ctx_;
    std::map<std::string, Value> bindings_;

    const Chart& need_chart() const;
    const GradedContext& need_context();
    const GraphMultiDirac& need_graph();
    Value call(const Expr& e);
};

}  // namespace mdx
