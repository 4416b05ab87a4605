#include "fixtures.hh"

#include <semiring/congruence.hh>
#include <semiring/enumerate.hh>
#include <semiring/green.hh>
#include <semiring/structure.hh>

#include <doctest.h>

using namespace semiring;
using testing::fixture;

TEST_CASE("Green's relations of small additive reducts")
{
    auto lz = green(fixture("lz2").add_table());
    CHECK(lz.L.is_universal());
    CHECK(lz.R.is_identity());
    CHECK(lz.D.is_universal());
    CHECK(lz.J.is_universal());

    auto z = green(fixture("z2").add_table());
    for (auto * p : { &z.L, &z.R, &z.H, &z.D, &z.J })
        CHECK(p->is_universal());

    auto b = green(fixture("b2").add_table());
    for (auto * p : { &b.L, &b.R, &b.H, &b.D, &b.J })
        CHECK(p->is_identity());
}

TEST_CASE("non-associative tables are rejected")
{
    CHECK_THROWS_AS(green(testing::table(2, { 1, 1, 0, 0 })), PreconditionError);
}

TEST_CASE("band formulas")
{
    CHECK(band_d_check(fixture("b2")));
    CHECK(band_d_check(fixture("lz2")));
    CHECK(band_d_check(fixture("rz2")));
    CHECK_THROWS_AS(band_d_check(fixture("z2")), PreconditionError);
}

TEST_CASE("quasi-orders")
{
    auto b2 = quasi_orders(fixture("b2"));
    CHECK(b2.add(0, 1));
    CHECK(! b2.add(1, 0));
    // the multiplicative order of a chain with meet runs the other way
    CHECK(b2.mul(0, 1));
    CHECK(! b2.mul(1, 0));

    auto lz2 = quasi_orders(fixture("lz2"));
    CHECK(lz2.left_add == Relation::identity(2));
    CHECK_THROWS_AS(quasi_orders(fixture("z2")), PreconditionError);
}

TEST_CASE("partitions")
{
    Partition p({ 5, 3, 5, 3 });
    CHECK(p.labels() == std::vector<int>{ 0, 1, 0, 1 });
    CHECK(p.to_string() == "{{0,2},{1,3}}");
    Partition q({ 0, 0, 1, 1 });
    CHECK(p.meet(q).is_identity());
    CHECK(p.join(q).is_universal());
    CHECK(Partition::identity(4).refines(p));
    CHECK(! p.refines(q));
    CHECK(p.to_relation().to_partition() == p);
    CHECK(p.to_relation().is_equivalence());
}

TEST_CASE("Green's relations over every idempotent semiring of order at most 4")
{
    for (int n = 1 ; n <= 4 ; ++n)
        for (auto & s : enumerate(EnumSpec{ .order = n, .idempotent_add = true, .idempotent_mul = true })) {
            auto g = green(s.add_table());
            CHECK(band_d_check(s));
            CHECK(band_l_formula(s) == g.L.to_relation());
            CHECK(band_r_formula(s) == g.R.to_relation());
            CHECK(band_d_formula(s) == g.D.to_relation());

            auto l = g.L.to_relation(), r = g.R.to_relation();
            CHECK(l.compose(r) == g.D.to_relation());
            CHECK(r.compose(l) == g.D.to_relation());

            CHECK(is_congruence(s, g.D));

            auto orders = quasi_orders(s);
            CHECK(orders.add.is_antisymmetric());
            CHECK(orders.mul.is_antisymmetric());
            for (auto * q : { &orders.left_add, &orders.right_add, &orders.left_mul, &orders.right_mul }) {
                CHECK(q->is_reflexive());
                CHECK(q->is_transitive());
            }
        }
}

TEST_CASE("in a completely regular semiring H+ is the least idempotent semiring congruence")
{
    for (int n = 1 ; n <= 4 ; ++n)
        for (auto & s : enumerate(EnumSpec{ .order = n, .completely_regular = true })) {
            auto h = additive_green_congruence(s, 'H');
            REQUIRE(h);
            for (auto & c : all_congruences(s)) {
                if (is_idempotent_semiring(quotient(c).algebra))
                    CHECK(h->partition().refines(c.partition()));
            }
        }
}
