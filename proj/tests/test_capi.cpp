#include <doctest.h>

#include <stdexcept>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include <altau/altau.h>

using nlohmann::json;

namespace
{

// Takes ownership of an altau_text and returns its contents.
std::string take(altau_text *t)
{
    std::string s(altau_text_data(t), altau_text_size(t));
    altau_text_free(t);
    return s;
}

struct Context {
    altau_context *ptr = nullptr;
    Context() { REQUIRE(altau_context_create(&ptr) == ALTAU_OK); }
    ~Context() { altau_context_free(ptr); }
};

altau_poly *parse(const char *text)
{
    altau_poly *p = nullptr;
    REQUIRE(altau_poly_parse(text, &p) == ALTAU_OK);
    return p;
}

} // namespace

TEST_SUITE("capi")
{
    TEST_CASE("version and status strings")
    {
        CHECK(std::strlen(altau_version()) > 0);
        CHECK(std::string(altau_status_string(ALTAU_OK)) != std::string(altau_status_string(ALTAU_INTERNAL)));
        CHECK(altau_status_string(static_cast<altau_status>(42)) != nullptr);
    }

    TEST_CASE("polynomial handles")
    {
        altau_poly *q = nullptr;
        altau_poly *r = nullptr;
        REQUIRE(altau_poly_variable('q', 0, &q) == ALTAU_OK);
        REQUIRE(altau_poly_variable('r', -1, &r) == ALTAU_OK);
        altau_poly *prod = nullptr;
        REQUIRE(altau_poly_arith(q, r, ALTAU_MUL, &prod) == ALTAU_OK);
        altau_poly *parsed = parse("q[n]*r[n-1]");
        CHECK(altau_poly_equal(prod, parsed) == 1);
        CHECK(altau_poly_equal(prod, q) == 0);
        CHECK(altau_poly_equal(nullptr, q) == -1);

        altau_poly *shifted = nullptr;
        REQUIRE(altau_poly_shift(prod, 2, &shifted) == ALTAU_OK);
        altau_text *s = nullptr;
        REQUIRE(altau_poly_to_string(shifted, &s) == ALTAU_OK);
        CHECK(take(s) == "q[n+2]*r[n+1]");

        altau_text *j = nullptr;
        REQUIRE(altau_poly_to_json(prod, &j) == ALTAU_OK);
        const std::string text = take(j);
        CHECK(json::accept(text));
        altau_poly *back = nullptr;
        REQUIRE(altau_poly_from_json(text.c_str(), &back) == ALTAU_OK);
        CHECK(altau_poly_equal(back, prod) == 1);

        altau_poly *c = nullptr;
        REQUIRE(altau_poly_constant("-3/6", &c) == ALTAU_OK);
        REQUIRE(altau_poly_to_string(c, &s) == ALTAU_OK);
        CHECK(take(s) == "-1/2");

        for (altau_poly *p : {q, r, prod, parsed, shifted, back, c}) {
            altau_poly_free(p);
        }
        altau_poly_free(nullptr);
        altau_text_free(nullptr);
    }

    TEST_CASE("invalid arguments")
    {
        altau_poly *p = nullptr;
        CHECK(altau_poly_parse("q[m]", &p) == ALTAU_INVALID_ARGUMENT);
        CHECK(p == nullptr);
        CHECK(std::string(altau_last_error()).find("cannot parse polynomial") != std::string::npos);
        CHECK(altau_poly_parse(nullptr, &p) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_poly_parse("q[n]", nullptr) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_poly_variable('x', 0, &p) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_poly_constant("1/0", &p) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_poly_from_json("{", &p) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_poly_from_json("{\"terms\":3}", &p) == ALTAU_INVALID_ARGUMENT);

        Context ctx;
        altau_text *t = nullptr;
        CHECK(altau_resolvent(ctx.ptr, '*', 1, ALTAU_FORMAT_JSON, &t) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_resolvent(ctx.ptr, '+', -1, ALTAU_FORMAT_JSON, &t) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_resolvent(ctx.ptr, '+', 1, static_cast<altau_format>(7), &t) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_resolvent(nullptr, '+', 1, ALTAU_FORMAT_JSON, &t) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_flow(ctx.ptr, '+', 1, 'z', ALTAU_FORMAT_JSON, &t) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_omega(ctx.ptr, "+x", 1, ALTAU_FORMAT_JSON, &t) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_theorem_check(ctx.ptr, 1, nullptr, 1, ALTAU_FORMAT_JSON, &t) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_cue_correlator("3/2", 2, "+1,-1", ALTAU_FORMAT_JSON, &t) == ALTAU_INVALID_ARGUMENT);
        CHECK(std::string(altau_last_error()).find("Q must satisfy") != std::string::npos);
        CHECK(altau_cue_correlator("1/2", 2, "+1", ALTAU_FORMAT_JSON, &t) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_cue_check("1/2", 0, 1, ALTAU_FORMAT_JSON, &t) == ALTAU_INVALID_ARGUMENT);
        CHECK(altau_cue_lpp(4, 1, 1, "1/2", 0, 1, ALTAU_FORMAT_JSON, &t) == ALTAU_INVALID_ARGUMENT);
        CHECK(t == nullptr);
    }

    TEST_CASE("derivations")
    {
        Context ctx;
        altau_poly *q = parse("q[n]");
        altau_poly *out = nullptr;
        REQUIRE(altau_apply_derivation(ctx.ptr, '+', 1, q, &out) == ALTAU_OK);
        altau_poly *expected = parse("-q[n-1] + r[n]*q[n]*q[n-1]");
        CHECK(altau_poly_equal(out, expected) == 1);
        altau_poly_free(out);
        altau_poly_free(expected);

        REQUIRE(altau_t_flow(ctx.ptr, q, &out) == ALTAU_OK);
        expected = parse("-q[n+1] + 2*q[n] - q[n-1] + r[n]*q[n]*(q[n+1] + q[n-1])");
        CHECK(altau_poly_equal(out, expected) == 1);
        altau_poly_free(out);
        altau_poly_free(expected);
        CHECK(altau_apply_derivation(ctx.ptr, '+', -1, q, &out) == ALTAU_INVALID_ARGUMENT);
        altau_poly_free(q);
    }

    TEST_CASE("structured JSON outputs")
    {
        Context ctx;
        altau_text *t = nullptr;
        REQUIRE(altau_resolvent(ctx.ptr, '-', 2, ALTAU_FORMAT_JSON, &t) == ALTAU_OK);
        const auto r = json::parse(take(t));
        CHECK(r["sign"] == "-");
        CHECK(r["order"] == 2);
        CHECK(r["a"].size() == 3);

        REQUIRE(altau_flow(ctx.ptr, '-', 0, 'q', ALTAU_FORMAT_JSON, &t) == ALTAU_OK);
        const auto f = json::parse(take(t));
        CHECK(f["alpha"] == "-");
        CHECK(f["target"] == "q");

        REQUIRE(altau_omega(ctx.ptr, "+-", 1, ALTAU_FORMAT_JSON, &t) == ALTAU_OK);
        const auto o = json::parse(take(t));
        CHECK(o["pattern"] == "+-");
        CHECK(o["entries"].size() == 4);

        REQUIRE(altau_verify_tau(ctx.ptr, 1, 1, 1, ALTAU_FORMAT_JSON, &t) == ALTAU_OK);
        CHECK(json::parse(take(t))["passed"] == true);

        REQUIRE(altau_theorem_check(ctx.ptr, 0, "+-+", 1, ALTAU_FORMAT_JSON, &t) == ALTAU_OK);
        const auto th = json::parse(take(t));
        CHECK(th["passed"] == true);
        CHECK(th["lines"].size() == 1);
    }

    TEST_CASE("text outputs")
    {
        Context ctx;
        altau_text *t = nullptr;
        REQUIRE(altau_flow(ctx.ptr, '+', 1, 'r', ALTAU_FORMAT_TEXT, &t) == ALTAU_OK);
        CHECK(take(t).find("D+1 r[n] = ") == 0);
        REQUIRE(altau_verify_tau(ctx.ptr, 1, 1, 1, ALTAU_FORMAT_TEXT, &t) == ALTAU_OK);
        CHECK(take(t).find("checks passed") != std::string::npos);
    }

    TEST_CASE("CUE entry points")
    {
        altau_text *t = nullptr;
        REQUIRE(altau_cue_correlator("1/2", 3, "+1,-1", ALTAU_FORMAT_JSON, &t) == ALTAU_OK);
        const auto c = json::parse(take(t));
        CHECK(c["value"] == "425/441");
        CHECK(c["oracle"] == "425/441");
        CHECK(c["agree"] == true);
        CHECK(c["stable"] == true);

        REQUIRE(altau_cue_correlator("1/2", 1, "+2,-2", ALTAU_FORMAT_JSON, &t) == ALTAU_OK);
        const auto b = json::parse(take(t));
        CHECK(b["stable"] == false);
        CHECK(b["agree"] == false);

        REQUIRE(altau_cue_check("1/3", 3, 1, ALTAU_FORMAT_JSON, &t) == ALTAU_OK);
        CHECK(json::parse(take(t))["passed"] == true);
        CHECK(altau_cue_check("1/3", 3, 0, ALTAU_FORMAT_JSON, &t) == ALTAU_CHECK_FAILED);
        REQUIRE(t != nullptr);
        CHECK(json::parse(take(t))["passed"] == false);

        REQUIRE(altau_cue_lpp(1, 1, 2, "1/2", 100, 3, ALTAU_FORMAT_JSON, &t) == ALTAU_OK);
        const auto l = json::parse(take(t));
        CHECK(l["probability"] == "63/64");
        CHECK(l["agree"] == true);
        CHECK(l["samples"] == 100);
    }

    TEST_CASE("a context shared between threads")
    {
        Context ctx;
        std::vector<std::thread> threads;
        std::vector<int> ok(4, 0);
        for (int i = 0; i < 4; ++i) {
            threads.emplace_back([&, i] {
                altau_text *t = nullptr;
                ok[static_cast<std::size_t>(i)] =
                    altau_flow(ctx.ptr, i % 2 == 0 ? '+' : '-', 3, 'q', ALTAU_FORMAT_TEXT, &t) == ALTAU_OK;
                altau_text_free(t);
            });
        }
        for (auto &th : threads) {
            th.join();
        }
        CHECK(ok == std::vector<int>(4, 1));
    }
}
