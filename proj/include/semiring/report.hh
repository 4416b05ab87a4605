#ifndef SEMIRING_GUARD_REPORT_HH
#define SEMIRING_GUARD_REPORT_HH 1

#include <semiring/classify.hh>
#include <semiring/theorems.hh>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace semiring
{
    inline const std::string report_schema = "semiring-report/1";

    struct PredicateEntry
    {
        std::string name;
        Verdict verdict;
    };

    struct ClassificationReport
    {
        std::string id;
        int order = 0;
        std::vector<PredicateEntry> predicates;
        std::vector<TheoremResult> theorems;

        [[nodiscard]] auto any_theorem_failed() const -> bool;
    };

    /// Predicates and theorem checks are reported in the order given, whatever the number of
    /// workers; names are validated before anything runs.
    auto classification_report(const Semiring & s, const std::string & id, const std::vector<std::string> & predicates,
            const std::vector<std::string> & theorems, const ClassifyOptions & options, int jobs = 1) -> ClassificationReport;

    /// One "name: verdict" line per predicate, then one block per theorem.
    auto to_text(const ClassificationReport & report) -> std::string;

    /// Indented JSON with a fixed key order, tagged with report_schema.
    auto to_json(const ClassificationReport & report) -> std::string;

    auto theorem_result_text(const TheoremResult & result, bool with_artifacts) -> std::string;

    /// Runs work(i) for i in [0, count) on up to `jobs` threads; results come back in index order.
    /// The first exception, by index, is rethrown after all workers finish.
    template <typename T_>
    auto parallel_map(std::size_t count, int jobs, const std::function<T_ (std::size_t)> & work) -> std::vector<T_>;

    /// Non-template core of parallel_map: calls work(i) exactly once for each i.
    auto parallel_for(std::size_t count, int jobs, const std::function<void (std::size_t)> & work) -> void;

    template <typename T_>
    auto parallel_map(std::size_t count, int jobs, const std::function<T_ (std::size_t)> & work) -> std::vector<T_>
    {
        std::vector<std::optional<T_>> slots(count);
        parallel_for(count, jobs, [&] (std::size_t i) { slots[i].emplace(work(i)); });
        std::vector<T_> result;
        result.reserve(count);
        for (auto & slot : slots)
            result.push_back(std::move(*slot));
        return result;
    }
}

#endif
