#include "fixtures.hh"
#include "naive_enumeration.hh"

#include <semiring/classify.hh>
#include <semiring/enumerate.hh>

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace semiring;
using testing::fixture;

namespace
{
    auto pair_of(const Semiring & s) -> naive::TablePair
    {
        naive::TablePair p(s.add_table().entries().begin(), s.add_table().entries().end());
        p.insert(p.end(), s.mul_table().entries().begin(), s.mul_table().entries().end());
        return p;
    }

    auto spec_for(int order, const std::string & constraints) -> EnumSpec
    {
        EnumSpec spec{ .order = order };
        if (constraints == "idempotent")
            spec.idempotent_add = spec.idempotent_mul = true;
        else if (constraints == "idempotent-add")
            spec.idempotent_add = true;
        else if (constraints == "idempotent-mul")
            spec.idempotent_mul = true;
        else if (constraints == "completely-regular")
            spec.completely_regular = true;
        else if (constraints == "orthoring")
            spec.orthoring = true;
        else if (constraints != "none")
            throw std::runtime_error("unknown constraint set " + constraints);
        return spec;
    }

    struct GoldenCount
    {
        int order;
        std::string constraints;
        long count;
    };

    auto golden_counts() -> std::vector<GoldenCount>
    {
        std::ifstream in(testing::golden_path("enumeration_counts.txt"));
        REQUIRE(in);
        std::vector<GoldenCount> result;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#')
                continue;
            std::istringstream fields(line);
            GoldenCount g;
            fields >> g.order >> g.constraints >> g.count;
            result.push_back(g);
        }
        return result;
    }

    auto golden(int order, const std::string & constraints) -> long
    {
        for (auto & g : golden_counts())
            if (g.order == order && g.constraints == constraints)
                return g.count;
        FAIL("no golden count for " << order << " " << constraints);
        return -1;
    }
}

TEST_CASE("the naive oracle's semigroup scan matches the labelled semigroup generator")
{
    // labelled semigroups on 1, 2, 3 points: 1, 8, 113
    std::vector<std::size_t> expected{ 1, 8, 113 };
    for (int n = 1 ; n <= 3 ; ++n) {
        auto naive_tables = naive::all_semigroups(n, false);
        CHECK(naive_tables.size() == expected[n - 1]);
        auto generated = labeled_semigroups(n, false);
        REQUIRE(generated.size() == naive_tables.size());
        for (std::size_t i = 0 ; i < generated.size() ; ++i)
            CHECK(std::vector<int>(generated[i].entries().begin(), generated[i].entries().end()) == naive_tables[i]);

        auto naive_bands = naive::all_semigroups(n, true);
        CHECK(labeled_semigroups(n, true).size() == naive_bands.size());
    }
    CHECK(labeled_semigroups(4, false).size() == 3492);
}

TEST_CASE("pruned enumeration equals the naive oracle up to order 3")
{
    for (int n = 1 ; n <= 3 ; ++n)
        for (auto [add, mul, name] : { std::tuple{ false, false, "none" }, std::tuple{ true, true, "idempotent" },
                    std::tuple{ true, false, "idempotent-add" }, std::tuple{ false, true, "idempotent-mul" } }) {
            auto oracle = naive::all_semirings(n, add, mul);
            std::set<naive::TablePair> pruned;
            for (auto & s : enumerate(EnumSpec{ .order = n, .idempotent_add = add, .idempotent_mul = mul }))
                pruned.insert(pair_of(s));
            CHECK_MESSAGE(pruned == oracle, n << " " << name);
            CHECK(long(oracle.size()) == golden(n, name));
        }
}

TEST_CASE("pruned enumeration equals the oracle's pair filter at order 4")
{
    std::vector<std::vector<int>> semigroups;
    for (auto & t : labeled_semigroups(4, false))
        semigroups.emplace_back(t.entries().begin(), t.entries().end());
    auto oracle = naive::semirings_from(4, semigroups, semigroups);
    std::set<naive::TablePair> pruned;
    for (auto & s : enumerate(EnumSpec{ .order = 4 }))
        pruned.insert(pair_of(s));
    CHECK(pruned == oracle);
    CHECK(long(oracle.size()) == golden(4, "none"));
}

TEST_CASE("golden counts")
{
    for (auto & g : golden_counts()) {
        auto stats = enumerate(spec_for(g.order, g.constraints), [] (const Semiring &) { });
        CHECK_MESSAGE(stats.emitted == g.count, g.order << " " << g.constraints);
        CHECK(stats.complete);
    }
}

TEST_CASE("emitted forms are valid, canonical and strictly increasing")
{
    for (int n = 1 ; n <= 3 ; ++n) {
        auto all = enumerate(EnumSpec{ .order = n });
        for (std::size_t i = 0 ; i < all.size() ; ++i) {
            CHECK(Semiring::validate(all[i].add_table(), all[i].mul_table()).ok());
            CHECK(canonical_form(all[i]) == all[i]);
            CHECK(pair_of(all[i]) == naive::canonical(n, pair_of(all[i])));
            if (i > 0)
                CHECK(canonical_less(all[i - 1], all[i]));
        }
    }
}

TEST_CASE("canonical forms")
{
    auto b2 = fixture("b2");
    auto swapped = Semiring::from_tables(testing::table(2, { 0, 0, 0, 1 }), testing::table(2, { 0, 1, 1, 1 }));
    CHECK(canonical_form(swapped) == canonical_form(b2));
    CHECK(canonical_form(canonical_form(b2)) == canonical_form(b2));
    CHECK(canonical_form(fixture("lz2")) != canonical_form(fixture("rz2")));
    CHECK(canonical_table(testing::table(2, { 1, 1, 1, 1 })) == testing::table(2, { 0, 0, 0, 0 }));
}

TEST_CASE("order 2 idempotent semirings include the two element lattice and both zero bands")
{
    auto all = enumerate(EnumSpec{ .order = 2, .idempotent_add = true, .idempotent_mul = true });
    for (auto name : { "b2", "lz2", "rz2" }) {
        auto form = canonical_form(fixture(name));
        CHECK_MESSAGE(std::find(all.begin(), all.end(), form) != all.end(), name);
    }
}

TEST_CASE("constraints filter exactly")
{
    for (auto & s : enumerate(EnumSpec{ .order = 3, .completely_regular = true }))
        CHECK(is_completely_regular(s));
    for (auto & s : enumerate(EnumSpec{ .order = 3, .orthoring = true }))
        CHECK(is_orthoring(s));

    long cr = 0;
    for (auto & s : enumerate(EnumSpec{ .order = 3 }))
        cr += is_completely_regular(s);
    CHECK(cr == golden(3, "completely-regular"));

    EnumSpec with_identity{ .order = 3, .idempotent_add = true, .idempotent_mul = true };
    with_identity.identities.push_back(parse_identity("x + y = y + x"));
    long lattices = 0;
    for (auto & s : enumerate(EnumSpec{ .order = 3, .idempotent_add = true, .idempotent_mul = true }))
        lattices += in_variety(s, "Sl+");
    CHECK(long(enumerate(with_identity).size()) == lattices);
}

TEST_CASE("a fixed addition table")
{
    EnumSpec spec{ .order = 3, .fixed_add = fixture("z3").add_table() };
    auto all = enumerate(spec);
    for (auto & s : all)
        CHECK(canonical_table(s.add_table()) == canonical_table(fixture("z3").add_table()));
    long expected = 0;
    for (auto & s : enumerate(EnumSpec{ .order = 3 }))
        expected += canonical_table(s.add_table()) == canonical_table(fixture("z3").add_table());
    CHECK(long(all.size()) == expected);
}

TEST_CASE("shards partition the output and resuming continues it")
{
    auto whole = enumerate(EnumSpec{ .order = 3 });
    std::set<naive::TablePair> merged;
    long total = 0;
    for (int k = 0 ; k < 3 ; ++k) {
        EnumSpec spec{ .order = 3, .shard_index = k, .shard_count = 3 };
        for (auto & s : enumerate(spec)) {
            merged.insert(pair_of(s));
            ++total;
        }
    }
    CHECK(total == long(whole.size()));
    CHECK(merged.size() == whole.size());

    EnumSpec head{ .order = 3, .cap = 100 };
    auto first = enumerate(head);
    CHECK(first.size() == 100);
    CHECK(! enumerate(head, [] (const Semiring &) { }).complete);
    EnumSpec rest{ .order = 3, .resume_after = first.back() };
    auto second = enumerate(rest);
    REQUIRE(second.size() == whole.size() - 100);
    CHECK(std::equal(second.begin(), second.end(), whole.begin() + 100));
}

TEST_CASE("order bounds")
{
    CHECK_THROWS_AS(enumerate(EnumSpec{ .order = 5 }, [] (const Semiring &) { }), CapExceeded);
    CHECK_THROWS_AS(enumerate(EnumSpec{ .order = 6, .idempotent_add = true }, [] (const Semiring &) { }), CapExceeded);
}
