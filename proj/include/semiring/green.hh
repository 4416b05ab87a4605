#ifndef SEMIRING_GUARD_GREEN_HH
#define SEMIRING_GUARD_GREEN_HH 1

#include <semiring/core.hh>

#include <string>
#include <vector>

namespace semiring
{
    class Partition;

    /// A binary relation on {0..n-1} as a dense boolean matrix.
    class Relation
    {
        private:
            int _order;
            std::vector<char> _bits;

        public:
            explicit Relation(int order);

            static auto identity(int order) -> Relation;

            [[nodiscard]] auto order() const -> int { return _order; }
            [[nodiscard]] auto operator() (Element a, Element b) const -> bool { return _bits[a * _order + b]; }
            auto set(Element a, Element b, bool value = true) -> void { _bits[a * _order + b] = value; }

            [[nodiscard]] auto is_reflexive() const -> bool;
            [[nodiscard]] auto is_symmetric() const -> bool;
            [[nodiscard]] auto is_transitive() const -> bool;
            [[nodiscard]] auto is_antisymmetric() const -> bool;
            [[nodiscard]] auto is_equivalence() const -> bool;

            [[nodiscard]] auto subset_of(const Relation & other) const -> bool;

            /// (a, c) whenever a this b and b other c.
            [[nodiscard]] auto compose(const Relation & other) const -> Relation;

            [[nodiscard]] auto transitive_closure() const -> Relation;

            /// Throws PreconditionError unless this is an equivalence.
            [[nodiscard]] auto to_partition() const -> Partition;

            /// "(0,1) (1,0)": all pairs in row-major order, as used for relations that are not equivalences.
            [[nodiscard]] auto to_string() const -> std::string;

            auto operator== (const Relation &) const -> bool = default;
    };

    /// A reflexive transitive relation.
    using QuasiOrder = Relation;

    /**
     * An equivalence relation in block form. Blocks are sorted internally and ordered by their
     * least element, so two equal equivalences have identical representations.
     */
    class Partition
    {
        private:
            std::vector<int> _block_of;
            std::vector<std::vector<Element>> _blocks;

        public:
            /// `labels[a]` is any block label for a; labels are renumbered canonically.
            explicit Partition(const std::vector<int> & labels);

            static auto identity(int order) -> Partition;
            static auto universal(int order) -> Partition;

            [[nodiscard]] auto order() const -> int { return int(_block_of.size()); }
            [[nodiscard]] auto block_of(Element a) const -> int { return _block_of[a]; }
            [[nodiscard]] auto labels() const -> const std::vector<int> & { return _block_of; }
            [[nodiscard]] auto blocks() const -> const std::vector<std::vector<Element>> & { return _blocks; }
            [[nodiscard]] auto block_count() const -> int { return int(_blocks.size()); }
            [[nodiscard]] auto related(Element a, Element b) const -> bool { return _block_of[a] == _block_of[b]; }

            [[nodiscard]] auto is_identity() const -> bool { return block_count() == order(); }
            [[nodiscard]] auto is_universal() const -> bool { return block_count() == 1; }

            /// Every block of this lies inside a block of other.
            [[nodiscard]] auto refines(const Partition & other) const -> bool;
            [[nodiscard]] auto meet(const Partition & other) const -> Partition;
            [[nodiscard]] auto join(const Partition & other) const -> Partition;

            [[nodiscard]] auto to_relation() const -> Relation;

            /// "{{0,2},{1}}"
            [[nodiscard]] auto to_string() const -> std::string;

            auto operator== (const Partition &) const -> bool = default;
            auto operator<=> (const Partition & other) const -> std::strong_ordering
            {
                return _block_of <=> other._block_of;
            }
    };

    struct GreenRelations
    {
        Partition L, R, H, D, J;
    };

    /**
     * Green's relations of the semigroup given by an associative table: L from the principal left
     * ideals S^1 a, R from a S^1, J from S^1 a S^1, H = L meet R, and D as the join of L and R.
     * Throws PreconditionError on a non-associative table.
     */
    auto green(const OpTable & table) -> GreenRelations;

    /// Is the formula a D+ b iff a+b+a = a and b+a+b = b the same relation as green(add).D?
    /// PreconditionError unless s is an idempotent semiring.
    auto band_d_check(const Semiring & s) -> bool;

    /// a L+ b iff a+b = a and b+a = b, and the dual a R+ b iff a+b = b and b+a = a, as partitions
    /// on an idempotent semiring. These formulas only describe Green's relations in bands.
    auto band_l_formula(const Semiring & s) -> Relation;
    auto band_r_formula(const Semiring & s) -> Relation;
    auto band_d_formula(const Semiring & s) -> Relation;

    struct QuasiOrders
    {
        QuasiOrder left_add;   ///< a <=l+ b iff b = a + b
        QuasiOrder right_add;  ///< a <=r+ b iff b = b + a
        QuasiOrder left_mul;   ///< a <=l* b iff a = b a
        QuasiOrder right_mul;  ///< a <=r* b iff a = a b
        QuasiOrder add;        ///< both additive ones
        QuasiOrder mul;        ///< both multiplicative ones
    };

    /// PreconditionError unless s is an idempotent semiring.
    auto quasi_orders(const Semiring & s) -> QuasiOrders;
}

#endif
