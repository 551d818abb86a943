#include <doctest.h>

#include <mdx/mdx.h>

#include <nlohmann/json.hpp>

#include <string>

namespace {

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { mdx_string_free(s); }
    std::string str() const { return s == nullptr ? std::string() : std::string(s); }
};

struct SessionGuard {
    mdx_session* s = mdx_session_new();
    ~SessionGuard() { mdx_session_free(s); }
};

}  // namespace

TEST_CASE("version string") {
    const char* v = mdx_version();
    REQUIRE(v != nullptr);
    CHECK(std::string(v).find('.') != std::string::npos);
}

TEST_CASE("session evaluation keeps state across calls") {
    SessionGuard g;
    REQUIRE(g.s != nullptr);

    OwnedString out1;
    CHECK(mdx_session_eval(g.s, "chart x, y; ambient 1;\nlet f = x y;", &out1.s) ==
          MDX_OK);

    OwnedString out2;
    CHECK(mdx_session_eval(g.s, "print d(f) ^ dx;", &out2.s) == MDX_OK);
    CHECK(!out2.str().empty());

    OwnedString out3;
    CHECK(mdx_session_eval(g.s, "print 2 + 2;", &out3.s) == MDX_OK);
    CHECK(out3.str().find('4') != std::string::npos);

    OwnedString out4;
    CHECK(mdx_session_eval(g.s, "assert d(d(f x)) == 0;", &out4.s) == MDX_OK);
}

TEST_CASE("status codes map the failure modes") {
    SessionGuard g;

    OwnedString parse;
    CHECK(mdx_session_eval(g.s, "chart x", &parse.s) == MDX_PARSE_ERROR);
    CHECK(parse.str().find("parse error at") != std::string::npos);

    OwnedString structural;
    CHECK(mdx_session_eval(g.s, "print nope;", &structural.s) == MDX_PARSE_ERROR);
    CHECK(!structural.str().empty());

    OwnedString assertion;
    CHECK(mdx_session_eval(g.s, "chart x, y; ambient 1; assert x == y;",
                           &assertion.s) == MDX_FAIL);
    CHECK(!assertion.str().empty());

    OwnedString unsupported;
    CHECK(mdx_session_eval(g.s,
                           "graph x (dx ^ dy);\nprint adm(y);",
                           &unsupported.s) == MDX_UNSUPPORTED);

    OwnedString nullcase;
    CHECK(mdx_session_eval(nullptr, "1;", &nullcase.s) == MDX_BAD_ARGUMENT);
    CHECK(mdx_session_eval(g.s, "1;", nullptr) == MDX_OK);
}

TEST_CASE("suite runner") {
    mdx_suite_config cfg;
    mdx_suite_config_init(&cfg);
    CHECK(cfg.trials > 0);
    CHECK(cfg.dimension >= 1);
    cfg.trials = 5;

    OwnedString text;
    CHECK(mdx_run_suite("pairing-symmetry", &cfg, 0, &text.s) == MDX_OK);
    CHECK(text.str().find("PASS") != std::string::npos);

    OwnedString json;
    CHECK(mdx_run_suite("pairing-symmetry", &cfg, 1, &json.s) == MDX_OK);
    nlohmann::json arr = nlohmann::json::parse(json.str());
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 1);
    CHECK(arr[0]["suite"] == "pairing-symmetry");
    CHECK(arr[0]["passed"] == true);

    OwnedString flipped;
    mdx_suite_config bad = cfg;
    bad.flip_schouten_sign = 1;
    CHECK(mdx_run_suite("schouten-axioms", &bad, 0, &flipped.s) == MDX_FAIL);
    CHECK(flipped.str().find("FAIL") != std::string::npos);

    OwnedString unknown;
    CHECK(mdx_run_suite("nope", &cfg, 0, &unknown.s) == MDX_BAD_ARGUMENT);

    mdx_suite_config invalid = cfg;
    invalid.dimension = 9;
    OwnedString invalid_out;
    CHECK(mdx_run_suite("pairing-symmetry", &invalid, 0, &invalid_out.s) ==
          MDX_BAD_ARGUMENT);

    CHECK(mdx_run_suite(nullptr, &cfg, 0, nullptr) == MDX_BAD_ARGUMENT);
}

TEST_CASE("suite list") {
    OwnedString list{mdx_suite_list()};
    std::string s = list.str();
    CHECK(s.find("schouten-axioms\t") != std::string::npos);
    CHECK(s.find("poisson-jacobi\t") != std::string::npos);
    int lines = 0;
    for (char ch : s)
        if (ch == '\n') ++lines;
    CHECK(lines == 15);
}
