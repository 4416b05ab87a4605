#ifndef SEMIRING_GUARD_ENUMERATE_HH
#define SEMIRING_GUARD_ENUMERATE_HH 1

#include <semiring/core.hh>
#include <semiring/terms.hh>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace semiring
{
    struct EnumSpec
    {
        int order = 1;
        bool idempotent_add = false;
        bool idempotent_mul = false;
        /// Only semirings whose addition is isomorphic to this table.
        std::optional<OpTable> fixed_add;
        bool completely_regular = false;
        bool orthoring = false;
        std::vector<Identity> identities;
        /// Stop after this many instances.
        std::optional<long> cap;
        /// Keep only addition representatives whose first row, read as a base-n number, is
        /// congruent to shard_index modulo shard_count.
        int shard_index = 0, shard_count = 1;
        /// Emit only canonical forms strictly after this one.
        std::optional<Semiring> resume_after;

        /// Human-readable list of the active constraints, e.g. "idempotent-add,orthoring".
        [[nodiscard]] auto describe() const -> std::string;
    };

    /// Largest order accepted without an additive constraint, and with one.
    inline constexpr int max_unconstrained_order = 4;
    inline constexpr int max_constrained_order = 5;

    /// Every associative table on {0..n-1} (bands only, if asked), in lexicographic order.
    auto labeled_semigroups(int order, bool idempotent = false) -> std::vector<OpTable>;

    /// The least relabelling of a single table.
    auto canonical_table(const OpTable & t) -> OpTable;

    /// The relabelling minimising (add, mul) lexicographically. Throws CapExceeded above order 8.
    auto canonical_form(const Semiring & s) -> Semiring;

    /// Strict order on canonical forms: addition entries first, then multiplication.
    auto canonical_less(const Semiring & a, const Semiring & b) -> bool;

    struct EnumStats
    {
        long emitted = 0;
        long addition_representatives = 0;
        /// False when the cap stopped the run early.
        bool complete = true;
    };

    /**
     * Streams every isomorphism class satisfying the spec exactly once, in increasing canonical
     * order. Throws CapExceeded when the order is beyond the supported bound.
     */
    auto enumerate(const EnumSpec & spec, const std::function<void (const Semiring &)> & emit) -> EnumStats;

    auto enumerate(const EnumSpec & spec) -> std::vector<Semiring>;
}

#endif
