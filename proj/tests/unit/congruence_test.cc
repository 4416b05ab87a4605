#include "fixtures.hh"

#include <semiring/classify.hh>
#include <semiring/congruence.hh>
#include <semiring/enumerate.hh>
#include <semiring/structure.hh>

#include <doctest.h>

using namespace semiring;
using testing::fixture;

namespace
{
    // (a, b) is |T| a + b in every product fixture, so the first coordinate kernel pairs 2a and 2a+1
    const Partition first_coordinate{ std::vector<int>{ 0, 0, 1, 1 } };

    using Pairs = std::vector<std::pair<Element, Element>>;

    auto universal(int n) -> Relation
    {
        return Partition::universal(n).to_relation();
    }
}

TEST_CASE("is_congruence")
{
    CHECK(is_congruence(fixture("b2"), Partition::identity(2)));
    CHECK(is_congruence(fixture("z2"), Partition::universal(2)));
    CHECK(is_congruence(fixture("b2xz2"), first_coordinate));
    CHECK(! is_congruence(fixture("z3"), Partition({ 0, 0, 1 })));
    CHECK_THROWS_AS(Congruence(fixture("z3"), Partition({ 0, 0, 1 })), PreconditionError);
}

TEST_CASE("generated congruences")
{
    CHECK(congruence_generated(fixture("b2"), Pairs{}).partition().is_identity());
    CHECK(congruence_generated(fixture("z2"), Pairs{ { 0, 1 } }).partition().is_universal());
    CHECK(congruence_generated(fixture("b2xz2"), Pairs{ { 0, 1 } }).partition() == first_coordinate);
    // in Z3 any nontrivial identification collapses everything
    CHECK(congruence_generated(fixture("z3"), Pairs{ { 1, 2 } }).partition().is_universal());
}

TEST_CASE("congruence lattices")
{
    CHECK(all_congruences(fixture("z2")).size() == 2);
    CHECK(all_congruences(fixture("b2")).size() == 2);

    auto cs = all_congruences(fixture("b2xz2"));
    CHECK(cs.front().partition().is_identity());
    CHECK(cs.back().partition().is_universal());
    bool first = false, second = false;
    for (auto & c : cs) {
        first = first || c.partition() == first_coordinate;
        second = second || c.partition() == Partition({ 0, 1, 0, 1 });
    }
    CHECK(first);
    CHECK(second);

    CHECK_THROWS_AS(all_congruences(fixture("lz2xrz2xz2"), 4), CapExceeded);
}

TEST_CASE("every partition that is a congruence appears in the lattice")
{
    // brute force over all set partitions of an order 4 carrier, via restricted growth strings
    for (auto & name : { "b2xz2", "lz2xz2", "b2xlz2", "z4", "z4zero" }) {
        auto s = fixture(name);
        auto lattice = all_congruences(s);
        int count = 0;
        std::vector<int> g(4, 0);
        for (g[1] = 0 ; g[1] <= 1 ; ++g[1])
            for (g[2] = 0 ; g[2] <= std::max(g[0], g[1]) + 1 ; ++g[2])
                for (g[3] = 0 ; g[3] <= std::max({ g[0], g[1], g[2] }) + 1 ; ++g[3])
                    if (is_congruence(s, Partition(g)))
                        ++count;
        CHECK_MESSAGE(count == int(lattice.size()), name);
    }
}

TEST_CASE("least distributive lattice congruence")
{
    CHECK(least_dl_congruence(fixture("b2")).partition().is_identity());
    CHECK(least_dl_congruence(fixture("lz2")).partition().is_universal());
    CHECK(least_dl_congruence(fixture("z2")).partition().is_universal());
}

TEST_CASE("sigma and eta")
{
    CHECK(sigma(fixture("b2")) == Relation::identity(2));
    CHECK(sigma(fixture("lz2")) == universal(2));
    CHECK(sigma(fixture("rz2")) == universal(2));
    CHECK(eta(fixture("b2")).partition().is_identity());
    CHECK(eta(fixture("lz2")).partition().is_universal());
    CHECK(eta(fixture("b2xlz2")).partition() == first_coordinate);
    CHECK_THROWS_AS(sigma(fixture("z2")), PreconditionError);
}

TEST_CASE("nu+ and the lambda pair")
{
    CHECK(nu_plus(fixture("z2")).partition().is_identity());
    CHECK(nu_plus(fixture("b2")).partition().is_identity());
    CHECK(nu_plus(fixture("lz2")).partition().is_universal());

    auto z2 = lambda12(fixture("z2"));
    CHECK(z2.lambda1.partition().is_identity());
    CHECK(z2.lambda2.partition().is_identity());
    auto lz2 = lambda12(fixture("lz2"));
    CHECK(lz2.lambda1.partition().is_universal());
    CHECK(lz2.lambda2.partition().is_identity());
    auto rz2 = lambda12(fixture("rz2"));
    CHECK(rz2.lambda1.partition().is_identity());
    CHECK(rz2.lambda2.partition().is_universal());
}

TEST_CASE("nu+ is the least b-lattice of rings congruence on every orthoring of order at most 4")
{
    for (int n = 1 ; n <= 4 ; ++n)
        for (auto & s : enumerate(EnumSpec{ .order = n, .orthoring = true }))
            CHECK(nu_plus_leastness_counterexamples(s).empty());
}

TEST_CASE("lambda1 and lambda2 permute to nu+ on every band orthoring of order at most 4")
{
    for (int n = 1 ; n <= 4 ; ++n)
        for (auto & s : enumerate(EnumSpec{ .order = n, .orthoring = true })) {
            if (! is_band_orthoring(s))
                continue;
            auto pair = lambda12(s);
            auto l1 = pair.lambda1.partition().to_relation(), l2 = pair.lambda2.partition().to_relation();
            auto nu = nu_plus(s).partition().to_relation();
            CHECK(l1.compose(l2) == nu);
            CHECK(l2.compose(l1) == nu);
            CHECK(pair.lambda1.partition().meet(pair.lambda2.partition()).is_identity());
        }
}

TEST_CASE("sigma, eta and the least distributive lattice congruence over idempotent semirings of order at most 4")
{
    for (int n = 1 ; n <= 4 ; ++n)
        for (auto & s : enumerate(EnumSpec{ .order = n, .idempotent_add = true, .idempotent_mul = true })) {
            auto least = least_dl_congruence(s);
            CHECK(in_variety(quotient(least).algebra, "D"));
            CHECK(eta(s) == least);
            if (in_variety(s, "N")) {
                CHECK(sigma(s).is_transitive());
                CHECK(sigma(s) == least.partition().to_relation());
            }
            auto s_rel = sigma(s);
            CHECK(s_rel.is_reflexive());
            CHECK(s_rel.is_symmetric());
        }
}
