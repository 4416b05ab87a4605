#ifndef SEMIRING_GUARD_CORE_HH
#define SEMIRING_GUARD_CORE_HH 1

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiring
{
    /// Carrier elements are always 0, ..., n - 1.
    using Element = int;

    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A caller asked for something outside an operation's domain (e.g. sigma on a non-idempotent semiring).
    class PreconditionError : public Error
    {
        public:
            using Error::Error;
    };

    /// A size cap was exceeded.
    class CapExceeded : public Error
    {
        public:
            using Error::Error;
    };

    /// Raised when a computed object contradicts a result it is supposed to realise, e.g. the
    /// transitive closure of sigma failing to be the least distributive lattice congruence. These
    /// are findings, not bugs, and the CLI maps them to exit code 3.
    class TheoremViolation : public Error
    {
        public:
            using Error::Error;
    };

    class MissingInverse : public Error
    {
        public:
            MissingInverse();
    };

    /// An n by n Cayley table, row-major: at(i, j) is i o j.
    class OpTable
    {
        private:
            int _order = 0;
            std::vector<Element> _entries;

        public:
            OpTable() = default;

            /// Throws Error on a size mismatch or an out of range entry.
            OpTable(int order, std::vector<Element> entries);

            [[nodiscard]] auto order() const -> int { return _order; }

            [[nodiscard]] auto at(Element a, Element b) const -> Element
            {
                return _entries[a * _order + b];
            }

            [[nodiscard]] auto entries() const -> std::span<const Element> { return _entries; }
            [[nodiscard]] auto row(Element a) const -> std::span<const Element>;

            [[nodiscard]] auto is_associative() const -> bool;
            [[nodiscard]] auto is_commutative() const -> bool;
            [[nodiscard]] auto is_idempotent() const -> bool;

            auto operator<=> (const OpTable &) const = default;
            auto operator== (const OpTable &) const -> bool = default;
    };

    /// One failed axiom instance, e.g. {"left-distributivity", {1, 0, 1}}.
    struct Violation
    {
        std::string axiom;
        std::vector<Element> witness;

        [[nodiscard]] auto to_string() const -> std::string;
    };

    struct ValidationResult;

    /**
     * A validated finite semiring. Immutable, cheap to copy (shared representation), and safe to
     * share between threads. The additive pseudo-inverse is computed at most once on first
     * request; concurrent readers see either nothing or the complete table.
     */
    class Semiring
    {
        private:
            struct Impl;
            std::shared_ptr<const Impl> _imp;

            explicit Semiring(std::shared_ptr<const Impl>);

        public:
            /// Checks every axiom instance and reports all of them.
            static auto validate(const OpTable & add, const OpTable & mul) -> ValidationResult;

            /// Like validate, but also checks a supplied pseudo-inverse against x = x+x'+x,
            /// x+x' = x'+x, x'' = x and against the computed group inverse.
            static auto validate(const OpTable & add, const OpTable & mul,
                    const std::vector<Element> & inverse) -> ValidationResult;

            /// Throws Error listing the violations if the tables do not form a semiring.
            static auto from_tables(const OpTable & add, const OpTable & mul) -> Semiring;

            [[nodiscard]] auto order() const -> int;
            [[nodiscard]] auto add_table() const -> const OpTable &;
            [[nodiscard]] auto mul_table() const -> const OpTable &;

            [[nodiscard]] auto add(Element a, Element b) const -> Element { return add_table().at(a, b); }
            [[nodiscard]] auto mul(Element a, Element b) const -> Element { return mul_table().at(a, b); }

            /// x -> x', the inverse of x inside its additive H-class. Absent unless every element
            /// lies in a subgroup of (S, +).
            [[nodiscard]] auto pseudo_inverse() const -> const std::optional<std::vector<Element>> &;
            [[nodiscard]] auto has_pseudo_inverse() const -> bool { return pseudo_inverse().has_value(); }

            /// Throws MissingInverse when there is no pseudo-inverse.
            [[nodiscard]] auto inverse(Element a) const -> Element;

            /// x + x'
            [[nodiscard]] auto circle(Element a) const -> Element;

            [[nodiscard]] auto elements() const -> std::vector<Element>;

            auto operator<=> (const Semiring & other) const -> std::strong_ordering;
            auto operator== (const Semiring & other) const -> bool;
    };

    struct ValidationResult
    {
        std::optional<Semiring> semiring;
        std::vector<Violation> violations;

        [[nodiscard]] auto ok() const -> bool { return violations.empty(); }
    };

    /// A subset of a semiring's carrier, members sorted.
    class SubsetView
    {
        private:
            Semiring _parent;
            std::vector<Element> _members;

        public:
            SubsetView(Semiring parent, std::vector<Element> members);

            [[nodiscard]] auto parent() const -> const Semiring & { return _parent; }
            [[nodiscard]] auto members() const -> const std::vector<Element> & { return _members; }
            [[nodiscard]] auto contains(Element a) const -> bool;
            [[nodiscard]] auto size() const -> std::size_t { return _members.size(); }

            [[nodiscard]] auto closed_under_add() const -> bool;
            [[nodiscard]] auto closed_under_mul() const -> bool;

            /// The subsemiring on the members, relabelled 0..k-1 in increasing order. Throws
            /// PreconditionError if the subset is not closed under both operations.
            [[nodiscard]] auto as_semiring() const -> Semiring;
    };

    /// E+(S) = { e : e + e = e }
    auto additive_idempotents(const Semiring & s) -> SubsetView;

    auto is_idempotent_semiring(const Semiring & s) -> bool;

    /// x -> x' where (n+1)x = x and x' = (2n-1)x, if every element lies in an additive subgroup.
    auto compute_pseudo_inverse(const OpTable & add) -> std::optional<std::vector<Element>>;
}

#endif
