#include "fixtures.hh"

#include <semiring/core.hh>
#include <semiring/enumerate.hh>
#include <semiring/io.hh>
#include <semiring/structure.hh>

#include <doctest.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

using namespace semiring;
using testing::fixture;
using testing::table;

TEST_CASE("ring and lattice tables validate")
{
    auto z2 = Semiring::validate(table(2, { 0, 1, 1, 0 }), table(2, { 0, 0, 0, 1 }));
    CHECK(z2.ok());
    auto b2 = Semiring::validate(table(2, { 0, 1, 1, 1 }), table(2, { 0, 0, 0, 1 }));
    CHECK(b2.ok());
}

TEST_CASE("a failed distributive law is reported with its witness")
{
    // add = max, mul(i, j) = 1 - j
    auto r = Semiring::validate(table(2, { 0, 1, 1, 1 }), table(2, { 1, 0, 1, 0 }));
    REQUIRE(! r.ok());
    bool distributivity = false;
    for (auto & v : r.violations) {
        CHECK(v.witness.size() == 3);
        if (v.axiom.find("distributivity") != std::string::npos)
            distributivity = true;
    }
    CHECK(distributivity);
    CHECK_THROWS_AS(Semiring::from_tables(table(2, { 0, 1, 1, 1 }), table(2, { 1, 0, 1, 0 })), Error);
}

TEST_CASE("validation reports every violation, not just the first")
{
    // constant non-associative junk: x o y = 1 - x on both reducts
    auto r = Semiring::validate(table(2, { 1, 1, 0, 0 }), table(2, { 1, 1, 0, 0 }));
    CHECK(r.violations.size() > 2);
}

TEST_CASE("malformed tables are rejected")
{
    CHECK_THROWS_AS(OpTable(2, { 0, 1, 1 }), Error);
    CHECK_THROWS_AS(OpTable(2, { 0, 1, 1, 2 }), Error);
    auto mismatch = Semiring::validate(table(2, { 0, 1, 1, 0 }), table(1, { 0 }));
    REQUIRE(mismatch.violations.size() == 1);
    CHECK(mismatch.violations[0].axiom == "dimension-mismatch");
}

TEST_CASE("additive idempotents")
{
    CHECK(additive_idempotents(fixture("z2")).members() == std::vector<Element>{ 0 });
    CHECK(additive_idempotents(fixture("b2")).members() == std::vector<Element>{ 0, 1 });
    // (a, b) is 2a + b, so (0,0) and (1,0) are 0 and 2
    CHECK(additive_idempotents(fixture("b2xz2")).members() == std::vector<Element>{ 0, 2 });
}

TEST_CASE("idempotent semirings")
{
    CHECK(is_idempotent_semiring(fixture("b2")));
    CHECK(is_idempotent_semiring(fixture("lz2")));
    CHECK(! is_idempotent_semiring(fixture("z2")));
}

TEST_CASE("pseudo-inverse")
{
    CHECK(fixture("z2").pseudo_inverse() == std::vector<Element>{ 0, 1 });
    CHECK(fixture("b2").pseudo_inverse() == std::vector<Element>{ 0, 1 });
    CHECK(fixture("z4zero").pseudo_inverse() == std::vector<Element>{ 0, 3, 2, 1 });
    CHECK(fixture("z3").circle(1) == 0);

    auto null2 = fixture("null2");
    CHECK(! null2.has_pseudo_inverse());
    CHECK_THROWS_AS((void) null2.inverse(1), MissingInverse);
}

TEST_CASE("pseudo-inverse satisfies its defining identities wherever it exists")
{
    for (int n = 1 ; n <= 3 ; ++n)
        for (auto & s : enumerate(EnumSpec{ .order = n })) {
            if (! s.has_pseudo_inverse())
                continue;
            for (Element x = 0 ; x < n ; ++x) {
                Element xi = s.inverse(x);
                CHECK(s.add(s.add(x, xi), x) == x);
                CHECK(s.add(x, xi) == s.add(xi, x));
                CHECK(s.inverse(xi) == x);
            }
        }
}

TEST_CASE("the pseudo-inverse is computed once under concurrent readers")
{
    auto s = fixture("rz2xz3");
    std::atomic<int> mismatches{ 0 };
    std::vector<std::thread> readers;
    for (int t = 0 ; t < 8 ; ++t)
        readers.emplace_back([&] {
            auto & inv = s.pseudo_inverse();
            if (! inv || inv->size() != 6u)
                ++mismatches;
        });
    for (auto & t : readers)
        t.join();
    CHECK(mismatches == 0);
}

TEST_CASE("a supplied inverse row is checked")
{
    auto z3 = fixture("z3");
    CHECK(Semiring::validate(z3.add_table(), z3.mul_table(), { 0, 2, 1 }).ok());
    CHECK(! Semiring::validate(z3.add_table(), z3.mul_table(), { 0, 1, 2 }).ok());
}

TEST_CASE("subsets")
{
    auto s = fixture("b2xz2");
    SubsetView e(s, { 0, 2 });
    CHECK(e.closed_under_add());
    CHECK(e.closed_under_mul());
    CHECK(e.as_semiring().order() == 2);
    SubsetView odd(s, { 1 });
    CHECK(! odd.closed_under_add());
    CHECK_THROWS_AS((void) odd.as_semiring(), PreconditionError);
}

TEST_CASE("every additive idempotent of a completely regular semiring is multiplicatively idempotent")
{
    for (int n = 1 ; n <= 3 ; ++n)
        for (auto & s : enumerate(EnumSpec{ .order = n, .completely_regular = true })) {
            auto idempotents = additive_idempotents(s);
            for (auto e : idempotents.members())
                CHECK(s.mul(e, e) == e);
        }
}

TEST_CASE("serialisation round trips byte for byte")
{
    for (auto & name : testing::all_fixture_names()) {
        auto s = fixture(name);
        auto text = format_semiring(s);
        CHECK(parse_semiring(text) == s);
        CHECK(format_semiring(parse_semiring(text)) == text);
        auto with_inverse = format_semiring(s, true);
        CHECK(parse_semiring(with_inverse) == s);
        CHECK((with_inverse.find("inv:") != std::string::npos) == s.has_pseudo_inverse());
    }
}

TEST_CASE("parse errors carry line numbers")
{
    try {
        (void) read_semiring_file(testing::data_path("malformed.sr"));
        FAIL("no exception");
    }
    catch (const AxiomError &) {
        FAIL("format error reported as axiom failure");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 7);
    }

    CHECK_THROWS_AS(parse_semiring("order: 1\nadd:\n0\nmul:\n0"), ParseError);
    CHECK_THROWS_AS(parse_semiring("order: 2\nadd:\n0 1\n1 0\nmul:\n0 0\n"), ParseError);
    CHECK_NOTHROW(parse_semiring("# comment\norder: 1\nadd:\n0\n# between\nmul:\n0\n"));
}

TEST_CASE("axiom failures in a file are reported separately from format errors")
{
    try {
        (void) read_semiring_file(testing::data_path("bad_distributive.sr"));
        FAIL("no exception");
    }
    catch (const AxiomError & e) {
        CHECK(! e.violations().empty());
    }
}
