#ifndef SEMIRING_GUARD_CLASSIFY_HH
#define SEMIRING_GUARD_CLASSIFY_HH 1

#include <semiring/congruence.hh>
#include <semiring/core.hh>
#include <semiring/structure.hh>
#include <semiring/terms.hh>

#include <optional>
#include <string>
#include <vector>

namespace semiring
{
    struct ClassifyOptions
    {
        Convention convention = Convention::Standard;
        int congruence_cap = default_congruence_cap;
        int isomorphism_cap = default_isomorphism_cap;
        /// Also decide Mal'cev membership by searching every congruence, and compare.
        bool malcev_cross_check = false;
    };

    struct Verdict
    {
        bool holds = false;
        /// Counterexample or explanation; empty when there is nothing to say.
        std::string witness;
    };

    struct CompletelyRegularRoutes
    {
        /// The pseudo-inverse exists and the five defining identities hold.
        bool equational = false;
        /// H+ is a congruence, S/H+ is an idempotent semiring, and every H+ class is a ring.
        bool structural = false;
        std::string equational_witness, structural_witness;
    };

    auto completely_regular_routes(const Semiring & s) -> CompletelyRegularRoutes;

    /// Union of rings. Throws TheoremViolation when the two routes disagree.
    auto is_completely_regular(const Semiring & s) -> bool;

    /// Completely regular, and E+(S) is closed under + and *.
    auto is_orthoring(const Semiring & s) -> bool;

    /// (S, +) is an abelian group.
    auto is_ring(const Semiring & s) -> bool;

    /// Completely regular with (S, +) a rectangular group. When this holds, an isomorphism onto
    /// E+(S) x H is also constructed (H the H+ class of the least additive idempotent); its absence
    /// throws TheoremViolation.
    auto is_rectangular_ring(const Semiring & s, int isomorphism_cap = default_isomorphism_cap) -> bool;

    /// Rectangular ring whose additive idempotents satisfy e + f = e.
    auto is_left_ring(const Semiring & s, int isomorphism_cap = default_isomorphism_cap) -> bool;

    /// Rectangular ring whose additive idempotents satisfy e + f = f.
    auto is_right_ring(const Semiring & s, int isomorphism_cap = default_isomorphism_cap) -> bool;

    /// Orthoring whose E+ is in BI (LBI, RBI).
    auto is_band_orthoring(const Semiring & s) -> bool;
    auto is_left_band_orthoring(const Semiring & s) -> bool;
    auto is_right_band_orthoring(const Semiring & s) -> bool;

    struct WeakCliffordRoutes
    {
        /// Commutative addition, completely regular, and the weak Clifford identities.
        bool equational = false;
        /// The least distributive lattice congruence has ring classes.
        bool structural = false;
        std::string equational_witness, structural_witness;
    };

    auto weak_clifford_routes(const Semiring & s) -> WeakCliffordRoutes;

    /// Distributive lattice of rings. Throws TheoremViolation when the routes disagree.
    auto is_weak_clifford(const Semiring & s) -> bool;

    /// Weak Clifford with E+ a k-ideal.
    auto is_clifford(const Semiring & s) -> bool;

    /// Does s satisfy every identity (and extra predicate) of the named catalog variety?
    auto is_in(const Semiring & s, const std::string & name, Convention convention = Convention::Standard) -> Verdict;

    /// Shorthand for is_in(...).holds.
    auto in_variety(const Semiring & s, const std::string & name, Convention convention = Convention::Standard) -> bool;

    enum class MalcevMode
    {
        /// S in U o D
        DQuotient,
        /// S in R+ o (U o D)
        Nested
    };

    /**
     * A congruence witnessing Mal'cev membership, for an idempotent semiring. In DQuotient mode this
     * is the least distributive lattice congruence, returned when all its classes lie in `inner`.
     * Any witness contains that one and varieties are closed under subalgebras, so nothing is
     * missed. In Nested mode it is D+, returned when its classes are in R+ and S/D+ has a
     * DQuotient witness for `inner`.
     */
    auto malcev_witness(const Semiring & s, const std::string & inner, MalcevMode mode,
            Convention convention = Convention::Standard) -> std::optional<Congruence>;

    /// The slow route: search every congruence for one with distributive lattice quotient and
    /// classes in `inner` (DQuotient mode only).
    auto malcev_witness_by_search(const Semiring & s, const std::string & inner,
            Convention convention = Convention::Standard, int cap = default_congruence_cap) -> std::optional<Congruence>;

    /// The classes of a congruence whose quotient is idempotent, as subsemirings.
    auto congruence_classes(const Congruence & c) -> std::vector<Semiring>;

    /// Named predicates offered by classify: catalog varieties plus the structural predicates.
    auto predicate_names(Convention convention = Convention::Standard) -> std::vector<std::string>;

    /// Throws Error for unknown names.
    auto evaluate_predicate(const Semiring & s, const std::string & name, const ClassifyOptions & options) -> Verdict;
}

#endif
