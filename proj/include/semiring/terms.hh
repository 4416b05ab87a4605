#ifndef SEMIRING_GUARD_TERMS_HH
#define SEMIRING_GUARD_TERMS_HH 1

#include <semiring/core.hh>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semiring
{
    /// Values for variables 0, 1, 2, ... in that order.
    using Assignment = std::vector<Element>;

    enum class TermKind
    {
        Variable,
        Plus,
        Times,
        Prime,
        Circle
    };

    /// An immutable term over +, *, postfix ' and the derived t + t'.
    class Term
    {
        private:
            struct Node;
            std::shared_ptr<const Node> _node;

            explicit Term(std::shared_ptr<const Node>);

        public:
            static auto variable(int index) -> Term;
            static auto plus(Term, Term) -> Term;
            static auto times(Term, Term) -> Term;
            static auto prime(Term) -> Term;
            static auto circle(Term) -> Term;

            [[nodiscard]] auto kind() const -> TermKind;
            [[nodiscard]] auto variable_index() const -> int;
            /// First operand; the only operand of Prime and Circle.
            [[nodiscard]] auto left() const -> const Term &;
            [[nodiscard]] auto right() const -> const Term &;

            /// 1 + the largest variable index, 0 for no variables.
            [[nodiscard]] auto arity() const -> int;
            [[nodiscard]] auto uses_inverse() const -> bool;
            auto collect_variables(std::vector<bool> & seen) const -> void;
    };

    auto operator+ (const Term & a, const Term & b) -> Term;
    auto operator* (const Term & a, const Term & b) -> Term;

    /// x, y, z, w, u, v for variables 0..5.
    auto variable_name(int index) -> std::string;

    /// Printed in the CLI grammar: + binds loosest, then *, then postfix '. Circle nodes are
    /// written out as (t + t').
    auto to_string(const Term & t) -> std::string;

    /// Parses the CLI grammar. `o(t)` is accepted and becomes Plus(t, Prime(t)).
    auto parse_term(std::string_view text) -> Term;

    /// Throws MissingInverse when t uses ' and the semiring has no pseudo-inverse, and Error on an
    /// unbound variable.
    auto eval_term(const Semiring & s, const Term & t, const Assignment & assignment) -> Element;

    class Identity
    {
        private:
            Term _lhs, _rhs;
            std::string _name;
            int _arity;

        public:
            /// Throws Error unless the variables used by both sides are exactly 0..k-1.
            Identity(Term lhs, Term rhs, std::string name = "");

            [[nodiscard]] auto lhs() const -> const Term & { return _lhs; }
            [[nodiscard]] auto rhs() const -> const Term & { return _rhs; }
            [[nodiscard]] auto name() const -> const std::string & { return _name; }
            [[nodiscard]] auto arity() const -> int { return _arity; }
            [[nodiscard]] auto uses_inverse() const -> bool;
    };

    auto to_string(const Identity & id) -> std::string;

    /// "lhs = rhs"
    auto parse_identity(std::string_view text, std::string name = "") -> Identity;

    /// The lexicographically first assignment (variable 0 most significant) under which the two
    /// sides differ, or nothing if the identity holds.
    auto find_counterexample(const Semiring & s, const Identity & id) -> std::optional<Assignment>;

    auto satisfies(const Semiring & s, const Identity & id) -> bool;

    auto format_assignment(const Assignment & a) -> std::string;

    /// Which reading of the left/right zero names to use. Under `standard` a left zero band is
    /// x o y = x; under `table1` the names are swapped so that LZ+ is x + y = y.
    enum class Convention
    {
        Standard,
        Table1
    };

    auto convention_name(Convention c) -> std::string;
    auto parse_convention(std::string_view) -> Convention;

    struct VarietySpec
    {
        std::string name;
        std::string description;
        std::vector<Identity> identities;
        bool requires_inverse = false;
        /// Non-equational conditions, evaluated by the classifier. Currently only "k-ideal(E+)".
        std::vector<std::string> extra_predicates;
    };

    using Catalog = std::map<std::string, VarietySpec>;

    /**
     * Named varieties: the idempotent-semiring varieties Sl+, R+, R*, LZ+, RZ+, LZ*, RZ*, BI,
     * LQBI, RQBI, N, LN, RN, D, LBI, RBI, the explicit projection bands ProjL+, ProjR+, ProjL*,
     * ProjR*, and the inverse-using sets CR (union of rings), Ri (rings), WC (weak Clifford) and
     * Clifford. Only LZ+, RZ+, LZ*, RZ* depend on the convention. Built once, immutable.
     */
    auto catalog(Convention convention = Convention::Table1) -> const Catalog &;

    /// Throws Error for an unknown name.
    auto variety(const std::string & name, Convention convention = Convention::Table1) -> const VarietySpec &;
}

#endif
