#ifndef SEMIRING_GUARD_CONGRUENCE_HH
#define SEMIRING_GUARD_CONGRUENCE_HH 1

#include <semiring/core.hh>
#include <semiring/green.hh>

#include <optional>
#include <utility>
#include <vector>

namespace semiring
{
    /// A partition known to be compatible with both operations of its parent semiring.
    class Congruence
    {
        private:
            Semiring _parent;
            Partition _partition;

        public:
            /// Throws PreconditionError if p is not a congruence of s.
            Congruence(Semiring s, Partition p);

            [[nodiscard]] auto parent() const -> const Semiring & { return _parent; }
            [[nodiscard]] auto partition() const -> const Partition & { return _partition; }
            [[nodiscard]] auto to_string() const -> std::string { return _partition.to_string(); }

            auto operator== (const Congruence & other) const -> bool { return _partition == other._partition; }
    };

    auto is_congruence(const Semiring & s, const Partition & p) -> bool;

    /// Exhaustive check; returns {a, b, c, kind} for the first failure, kind 0..3 for a+c, c+a, ac, ca.
    auto congruence_failure(const Semiring & s, const Partition & p) -> std::optional<std::vector<Element>>;

    /// The least congruence containing the pairs.
    auto congruence_generated(const Semiring & s, const std::vector<std::pair<Element, Element>> & pairs) -> Congruence;

    /// The least congruence containing the partition (its closure under translations).
    auto congruence_generated(const Semiring & s, const Partition & p) -> Congruence;

    /// Default cap for all_congruences.
    inline constexpr int default_congruence_cap = 8;

    /**
     * The whole congruence lattice, as joins of principal congruences. Sorted by decreasing number
     * of blocks and then by block labels, so the identity comes first and the universal relation
     * last. Throws CapExceeded above `cap`.
     */
    auto all_congruences(const Semiring & s, int cap = default_congruence_cap) -> std::vector<Congruence>;

    /**
     * The least congruence whose quotient is a distributive lattice, generated by every instance of
     * x + x = x, xx = x, x + y = y + x, xy = yx and x + xy = x.
     */
    auto least_dl_congruence(const Semiring & s) -> Congruence;

    /// a sigma b iff aba = aba + a + aba and bab = bab + b + bab. Needs an idempotent semiring.
    auto sigma(const Semiring & s) -> Relation;

    /// Transitive closure of sigma. Throws TheoremViolation if it is not a congruence or differs
    /// from least_dl_congruence.
    auto eta(const Semiring & s) -> Congruence;

    /// a eta b iff for some x, axbxa = axbxa + a + axbxa and bxaxb = bxaxb + b + bxaxb.
    /// Diagnostic only: the relation, without any claim that it is an equivalence.
    auto eta_witness_relation(const Semiring & s) -> Relation;

    /// a nu+ b iff a = a0 + b + a0 and b = b0 + a + b0 (x0 = x + x'). Needs an orthoring. Throws
    /// TheoremViolation if the relation is not a congruence with a b-lattice-of-rings quotient.
    auto nu_plus(const Semiring & s) -> Congruence;

    /// The raw nu+ relation, no checks beyond the pseudo-inverse existing.
    auto nu_plus_relation(const Semiring & s) -> Relation;

    /// Congruences whose quotient is completely regular with commutative addition (b-lattices of
    /// rings) but which do not contain nu+. Empty when nu+ is the least such.
    auto nu_plus_leastness_counterexamples(const Semiring & s, int cap = default_congruence_cap) -> std::vector<Congruence>;

    struct LambdaPair
    {
        Congruence lambda1;  ///< a = a0 + b and b = b0 + a
        Congruence lambda2;  ///< a = b + a0 and b = a + b0
    };

    /// Needs a band orthoring. Throws TheoremViolation unless both are congruences and
    /// lambda1 . lambda2 = lambda2 . lambda1 = nu+.
    auto lambda12(const Semiring & s) -> LambdaPair;

    auto lambda1_relation(const Semiring & s) -> Relation;
    auto lambda2_relation(const Semiring & s) -> Relation;

    /// One of Green's relations ('L', 'R', 'H', 'D' or 'J') of the additive reduct, if it is a
    /// congruence of the semiring.
    auto additive_green_congruence(const Semiring & s, char which) -> std::optional<Congruence>;
}

#endif
