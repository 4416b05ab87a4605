#include <semiring/report.hh>

#include <json.hpp>

#include <atomic>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

using std::string;
using std::vector;

namespace semiring
{
    auto ClassificationReport::any_theorem_failed() const -> bool
    {
        for (auto & t : theorems)
            if (t.status == TheoremStatus::Fail)
                return true;
        return false;
    }

    auto classification_report(const Semiring & s, const string & id, const vector<string> & predicates,
            const vector<string> & theorems, const ClassifyOptions & options, int jobs) -> ClassificationReport
    {
        auto known = predicate_names(options.convention);
        std::set<string> registry(known.begin(), known.end());
        for (auto & name : predicates)
            if (! registry.contains(name))
                throw Error("unknown predicate '" + name + "'");
        for (auto & name : theorems)
            find_theorem(name);

        ClassificationReport report;
        report.id = id;
        report.order = s.order();
        report.predicates = parallel_map<PredicateEntry>(predicates.size(), jobs, [&] (std::size_t i) {
                return PredicateEntry{ predicates[i], evaluate_predicate(s, predicates[i], options) };
            });
        report.theorems = parallel_map<TheoremResult>(theorems.size(), jobs, [&] (std::size_t i) {
                return verify_theorem(s, theorems[i], options);
            });
        return report;
    }

    auto theorem_result_text(const TheoremResult & result, bool with_artifacts) -> string
    {
        std::ostringstream out;
        out << result.id << ": " << status_name(result.status) << '\n';
        out << "  title: " << result.title << '\n';
        out << "  step: " << result.step << '\n';
        if (! result.detail.empty())
            out << "  detail: " << result.detail << '\n';
        if (with_artifacts)
            for (auto & a : result.artifacts) {
                if (a.text.find('\n') == string::npos)
                    out << "  " << a.label << ": " << a.text << '\n';
                else {
                    out << "  " << a.label << ":\n";
                    std::istringstream lines(a.text);
                    string line;
                    while (std::getline(lines, line))
                        out << "    " << line << '\n';
                }
            }
        return out.str();
    }

    auto to_text(const ClassificationReport & report) -> string
    {
        std::ostringstream out;
        out << "semiring: " << report.id << '\n';
        out << "order: " << report.order << '\n';
        for (auto & p : report.predicates) {
            out << p.name << ": " << (p.verdict.holds ? "true" : "false");
            if (! p.verdict.witness.empty())
                out << " (" << p.verdict.witness << ")";
            out << '\n';
        }
        for (auto & t : report.theorems)
            out << theorem_result_text(t, false);
        return out.str();
    }

    auto to_json(const ClassificationReport & report) -> string
    {
        using nlohmann::ordered_json;
        ordered_json doc;
        doc["schema"] = report_schema;
        doc["semiring"] = report.id;
        doc["order"] = report.order;
        ordered_json predicates = ordered_json::array();
        for (auto & p : report.predicates) {
            ordered_json entry;
            entry["name"] = p.name;
            entry["holds"] = p.verdict.holds;
            entry["witness"] = p.verdict.witness;
            predicates.push_back(entry);
        }
        doc["predicates"] = predicates;
        ordered_json theorems = ordered_json::array();
        for (auto & t : report.theorems) {
            ordered_json entry;
            entry["id"] = t.id;
            entry["status"] = status_name(t.status);
            entry["step"] = t.step;
            entry["detail"] = t.detail;
            ordered_json artifacts = ordered_json::array();
            for (auto & a : t.artifacts)
                artifacts.push_back(ordered_json{ { "label", a.label }, { "text", a.text } });
            entry["artifacts"] = artifacts;
            theorems.push_back(entry);
        }
        doc["theorems"] = theorems;
        return doc.dump(2) + "\n";
    }

    auto parallel_for(std::size_t count, int jobs, const std::function<void (std::size_t)> & work) -> void
    {
        vector<std::exception_ptr> errors(count);
        std::atomic<std::size_t> next{ 0 };
        auto worker = [&] {
            for (std::size_t i = next++ ; i < count ; i = next++) {
                try {
                    work(i);
                }
                catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };

        std::size_t threads = std::min<std::size_t>(std::max(jobs, 1), count);
        if (threads <= 1)
            worker();
        else {
            vector<std::thread> pool;
            for (std::size_t t = 0 ; t < threads ; ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
        }
        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);
    }
}
