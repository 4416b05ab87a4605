#ifndef SEMIRING_GUARD_STRUCTURE_HH
#define SEMIRING_GUARD_STRUCTURE_HH 1

#include <semiring/congruence.hh>
#include <semiring/core.hh>

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semiring
{
    /// A carrier map with its homomorphism, injectivity and surjectivity computed on construction.
    class Morphism
    {
        private:
            Semiring _source, _target;
            std::vector<Element> _map;
            bool _hom, _injective, _surjective;

        public:
            /// Throws Error if the map does not fit the carriers.
            Morphism(Semiring source, Semiring target, std::vector<Element> map);

            [[nodiscard]] auto source() const -> const Semiring & { return _source; }
            [[nodiscard]] auto target() const -> const Semiring & { return _target; }
            [[nodiscard]] auto map() const -> const std::vector<Element> & { return _map; }
            [[nodiscard]] auto operator() (Element a) const -> Element { return _map[a]; }

            [[nodiscard]] auto is_hom() const -> bool { return _hom; }
            [[nodiscard]] auto injective() const -> bool { return _injective; }
            [[nodiscard]] auto surjective() const -> bool { return _surjective; }
            [[nodiscard]] auto is_isomorphism() const -> bool { return _hom && _injective && _surjective; }

            /// "0->2 1->0 ..."
            [[nodiscard]] auto to_string() const -> std::string;
    };

    struct Quotient
    {
        Semiring algebra;
        Morphism projection;
    };

    /// S / c; element i of the quotient is block i of the partition.
    auto quotient(const Congruence & c) -> Quotient;

    /// The map S/finer -> S/coarser sending a block to the block containing it. Throws
    /// PreconditionError if finer does not refine coarser.
    auto induced_map(const Quotient & finer, const Quotient & coarser) -> Morphism;

    inline constexpr int default_product_cap = 64;

    /// Pairs (a, b) are numbered a * |T| + b.
    auto direct_product(const Semiring & s, const Semiring & t, int cap = default_product_cap) -> Semiring;

    auto trivial_semiring() -> Semiring;

    struct SpinedProduct
    {
        Semiring algebra;
        /// Element i of the algebra is pairs[i]; pairs are in lexicographic order.
        std::vector<std::pair<Element, Element>> pairs;
        Morphism first, second;

        [[nodiscard]] auto index_of(Element a, Element b) const -> std::optional<Element>;
    };

    /// { (a, b) : f1(a) = f2(b) } inside S1 x S2. f1 and f2 must be surjective homomorphisms into the
    /// same spine.
    auto spined_product(const Morphism & f1, const Morphism & f2) -> SpinedProduct;

    inline constexpr int default_isomorphism_cap = 16;

    /// The lexicographically least isomorphism, if any. Throws CapExceeded above `cap`.
    auto find_isomorphism(const Semiring & s, const Semiring & t, int cap = default_isomorphism_cap) -> std::optional<Morphism>;

    using SemiringPredicate = std::function<bool (const Semiring &)>;

    struct SubdirectDecomposition
    {
        Congruence first, second;
    };

    /**
     * Searches the congruence lattice, in its sorted order, for theta1, theta2 with trivial meet,
     * S/theta1 satisfying first and S/theta2 satisfying second. The embedding a -> (a/theta1,
     * a/theta2) is checked to be injective.
     */
    auto subdirect_decomposition(const Semiring & s, const SemiringPredicate & first, const SemiringPredicate & second,
            int cap = default_congruence_cap) -> std::optional<SubdirectDecomposition>;

    /// An ideal under * that is closed under + and subtractive: a + b or b + a in I with b in I forces a into I.
    auto is_k_ideal(const SubsetView & subset) -> bool;

    /// Only the additive part of the subtractive condition: b in I and a + b in I (or b + a in I) force a into I.
    auto is_subtractive(const SubsetView & subset) -> bool;

    /// a + b = b for some b implies a + a = a.
    auto absorbed_elements_idempotent(const Semiring & s) -> bool;
}

#endif
