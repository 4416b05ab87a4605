// Runs the eight acceptance criteria and prints one PASS or FAIL line for each. Exits non-zero if
// any criterion fails.

#include "fixtures.hh"
#include "naive_enumeration.hh"

#include <semiring/classify.hh>
#include <semiring/cli.hh>
#include <semiring/congruence.hh>
#include <semiring/enumerate.hh>
#include <semiring/theorems.hh>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace semiring;
using std::string;
using std::vector;

namespace
{
    struct Outcome
    {
        bool pass = true;
        string summary;
    };

    /// Counts failures and remembers the first few for the summary line.
    struct Tally
    {
        long checked = 0, failed = 0;
        vector<string> examples;

        auto record(bool ok, const std::function<string ()> & describe) -> void
        {
            ++checked;
            if (! ok) {
                ++failed;
                if (examples.size() < 3)
                    examples.push_back(describe());
            }
        }

        [[nodiscard]] auto failures() const -> string
        {
            string s;
            for (auto & e : examples)
                s += "; " + e;
            return s;
        }
    };

    auto enumerate_orders(int up_to, EnumSpec spec) -> vector<Semiring>
    {
        vector<Semiring> result;
        for (int n = 1 ; n <= up_to ; ++n) {
            spec.order = n;
            for (auto & s : enumerate(spec))
                result.push_back(s);
        }
        return result;
    }

    auto idempotent_set() -> const vector<Semiring> &
    {
        static const vector<Semiring> all = enumerate_orders(4, EnumSpec{ .idempotent_add = true, .idempotent_mul = true });
        return all;
    }

    auto curated() -> vector<std::pair<string, Semiring>>
    {
        vector<std::pair<string, Semiring>> result;
        for (auto & name : testing::curated_names())
            result.emplace_back(name, testing::fixture(name));
        return result;
    }

    auto label(const Semiring & s) -> string
    {
        std::ostringstream out;
        out << "order " << s.order() << " [";
        for (auto e : s.add_table().entries())
            out << e;
        out << "|";
        for (auto e : s.mul_table().entries())
            out << e;
        out << "]";
        return out.str();
    }

    auto check_theorems(Tally & tally, const string & name, const Semiring & s, const vector<string> & ids,
            const ClassifyOptions & options = {}) -> void
    {
        for (auto & id : ids) {
            auto r = verify_theorem(s, id, options);
            tally.record(r.status == TheoremStatus::Pass,
                    [&] { return name + " " + id + " " + status_name(r.status) + " at " + r.step + ": " + r.detail; });
        }
    }

    auto a1() -> Outcome
    {
        auto all = enumerate_orders(3, EnumSpec{});
        Tally tally;
        long regular = 0;
        for (auto & s : all) {
            auto routes = completely_regular_routes(s);
            regular += routes.equational;
            tally.record(routes.equational == routes.structural, [&] {
                    return label(s) + ": equational " + std::to_string(routes.equational)
                        + ", structural " + std::to_string(routes.structural); });
        }
        return { tally.failed == 0, std::to_string(all.size()) + " semirings of order <= 3, "
            + std::to_string(regular) + " completely regular, " + std::to_string(tally.failed) + " route disagreements"
                + tally.failures() };
    }

    auto a2() -> Outcome
    {
        Tally tally;
        long in_n = 0;
        for (auto & s : idempotent_set()) {
            check_theorems(tally, label(s), s, { "L3.3", "L3.4", "T3.5", "T3.7", "C3.8" });
            try {
                tally.record(eta(s) == least_dl_congruence(s), [&] { return label(s) + ": eta differs"; });
            }
            catch (const TheoremViolation & e) {
                tally.record(false, [&] { return label(s) + ": " + e.what(); });
            }
            if (in_variety(s, "N")) {
                ++in_n;
                tally.record(sigma(s).is_transitive(), [&] { return label(s) + ": sigma not transitive on N"; });
            }
        }
        return { tally.failed == 0, std::to_string(idempotent_set().size()) + " idempotent semirings of order <= 4 ("
            + std::to_string(in_n) + " in N), " + std::to_string(tally.checked) + " checks, "
                + std::to_string(tally.failed) + " violations" + tally.failures() };
    }

    auto a3() -> Outcome
    {
        Tally tally;
        for (auto & s : idempotent_set())
            if (in_variety(s, "BI"))
                check_theorems(tally, label(s), s, { "T3.10" });
        return { tally.failed == 0 && tally.checked > 0, std::to_string(tally.checked)
            + " band semirings reconstructed as spined products, " + std::to_string(tally.failed) + " failures"
                + tally.failures() };
    }

    auto a4() -> Outcome
    {
        Tally tally;
        vector<string> ids{ "T4.2", "T4.4", "T4.6" };
        for (auto & [name, s] : curated())
            check_theorems(tally, name, s, ids);
        long enumerated = 0;
        for (auto & s : enumerate_orders(4, EnumSpec{ .orthoring = true }))
            if (is_band_orthoring(s)) {
                ++enumerated;
                check_theorems(tally, label(s), s, ids);
            }
        return { tally.failed == 0, std::to_string(testing::curated_names().size()) + " curated orthorings and "
            + std::to_string(enumerated) + " band orthorings of order <= 4, " + std::to_string(tally.checked)
                + " checks, " + std::to_string(tally.failed) + " failures" + tally.failures() };
    }

    auto a5() -> Outcome
    {
        Tally tally;
        for (auto & [name, s] : curated())
            check_theorems(tally, name, s, { "T4.7", "C4.8", "C4.9" });
        return { tally.failed == 0, std::to_string(tally.checked) + " condition/decomposition comparisons on the curated set, "
            + std::to_string(tally.failed) + " disagreements" + tally.failures() };
    }

    auto a6() -> Outcome
    {
        vector<string> valid;
        string details;
        for (auto convention : { Convention::Standard, Convention::Table1 }) {
            Tally tally;
            for (auto & s : idempotent_set())
                check_theorems(tally, label(s), s, { "T3.9", "T3.11" }, ClassifyOptions{ .convention = convention });
            details += (details.empty() ? "" : "; ") + convention_name(convention) + " reading: "
                + std::to_string(tally.failed) + " of " + std::to_string(tally.checked) + " checks fail";
            if (tally.failed == 0)
                valid.push_back(convention_name(convention));
        }
        if (valid.size() == 1)
            return { true, "validated reading: " + valid.front() + " (LZ+ is "
                + to_string(variety("LZ+", parse_convention(valid.front())).identities.back()) + "); " + details };
        return { false, std::to_string(valid.size()) + " readings validate; " + details };
    }

    auto a7() -> Outcome
    {
        auto start = std::chrono::steady_clock::now();
        auto oracle = naive::all_semirings(2, false, false);
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::set<naive::TablePair> pruned;
        long count = 0;
        for (auto & s : enumerate(EnumSpec{ .order = 2 })) {
            naive::TablePair p(s.add_table().entries().begin(), s.add_table().entries().end());
            p.insert(p.end(), s.mul_table().entries().begin(), s.mul_table().entries().end());
            pruned.insert(p);
            ++count;
        }
        bool same = pruned == oracle && count == long(oracle.size());
        std::ostringstream out;
        out << "naive " << oracle.size() << ", pruned " << count << ", sets " << (same ? "identical" : "differ")
            << ", naive path " << std::fixed;
        out.precision(3);
        out << seconds << "s";
        return { same && seconds <= 60.0, out.str() };
    }

    auto a8() -> Outcome
    {
        auto run_cli = [] (vector<string> args) {
            std::ostringstream out, err;
            int code = run(args, out, err);
            return std::to_string(code) + "\n" + out.str();
        };
        Tally tally;
        for (auto & name : testing::curated_names()) {
            auto file = testing::fixture_path(name).string();
            vector<vector<string>> commands{ { "classify", file, "--all" } };
            for (auto & t : theorem_catalog())
                commands.push_back({ "decompose", file, "--theorem", t.id });
            for (auto & command : commands) {
                auto with = [&] (const string & jobs) {
                    vector<string> args{ "--jobs", jobs };
                    args.insert(args.end(), command.begin(), command.end());
                    return run_cli(args);
                };
                auto first = with("1"), second = with("1"), parallel = with("8");
                tally.record(first == second && first == parallel,
                        [&] { return name + ": " + command[0] + " " + (command.size() > 3 ? command[3] : ""); });
            }
        }
        return { tally.failed == 0, std::to_string(tally.checked) + " classify/decompose invocations compared over two runs "
            "and jobs 1 vs 8, " + std::to_string(tally.failed) + " differences" + tally.failures() };
    }
}

auto main() -> int
{
    vector<std::pair<string, std::function<Outcome ()>>> criteria{
        { "A1", a1 }, { "A2", a2 }, { "A3", a3 }, { "A4", a4 },
        { "A5", a5 }, { "A6", a6 }, { "A7", a7 }, { "A8", a8 } };

    bool all = true;
    for (auto & [id, check] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        }
        catch (const std::exception & e) {
            o = { false, string("exception: ") + e.what() };
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << seconds;
        std::cout << id << ' ' << (o.pass ? "PASS" : "FAIL") << ": " << o.summary << " [" << time.str() << "s]" << std::endl;
    }
    return all ? 0 : 1;
}
