#ifndef SEMIRING_GUARD_THEOREMS_HH
#define SEMIRING_GUARD_THEOREMS_HH 1

#include <semiring/classify.hh>
#include <semiring/core.hh>

#include <string>
#include <vector>

namespace semiring
{
    enum class TheoremStatus
    {
        Pass,
        Fail,
        NotApplicable
    };

    auto status_name(TheoremStatus) -> std::string;

    struct TheoremInfo
    {
        std::string id;
        /// Descriptive alias accepted wherever an id is.
        std::string slug;
        std::string title;
    };

    /// Every checkable result, in a fixed order.
    auto theorem_catalog() -> const std::vector<TheoremInfo> &;

    /// Accepts an id or a slug, case-insensitively for the id. Throws Error for unknown names.
    auto find_theorem(const std::string & name) -> const TheoremInfo &;

    /// A labelled piece of evidence, e.g. a quotient table or an isomorphism.
    struct Artifact
    {
        std::string label, text;
    };

    struct TheoremResult
    {
        std::string id, title;
        TheoremStatus status = TheoremStatus::NotApplicable;
        /// The hypothesis for NotApplicable, the first broken step for Fail, the last step for Pass.
        std::string step;
        std::string detail;
        std::vector<Artifact> artifacts;
    };

    /**
     * Checks one result on one instance. The hypothesis is tested first; outside it the result is
     * NotApplicable. TheoremViolation raised by a cross-checked predicate becomes a Fail. Cap
     * overruns propagate as CapExceeded.
     */
    auto verify_theorem(const Semiring & s, const std::string & id, const ClassifyOptions & options = {}) -> TheoremResult;
}

#endif
