#include <semiring/terms.hh>

#include <cctype>
#include <mutex>
#include <sstream>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace semiring
{
    struct Term::Node
    {
        TermKind kind;
        int variable = -1;
        optional<Term> left, right;
        int arity = 0;
        bool uses_inverse = false;
    };

    Term::Term(std::shared_ptr<const Node> node) :
        _node(std::move(node))
    {
    }

    auto Term::variable(int index) -> Term
    {
        if (index < 0)
            throw Error("negative variable index");
        auto n = std::make_shared<Node>();
        n->kind = TermKind::Variable;
        n->variable = index;
        n->arity = index + 1;
        return Term(n);
    }

    auto Term::plus(Term a, Term b) -> Term
    {
        auto n = std::make_shared<Node>();
        n->kind = TermKind::Plus;
        n->arity = std::max(a.arity(), b.arity());
        n->uses_inverse = a.uses_inverse() || b.uses_inverse();
        n->left = std::move(a);
        n->right = std::move(b);
        return Term(n);
    }

    auto Term::times(Term a, Term b) -> Term
    {
        auto n = std::make_shared<Node>();
        n->kind = TermKind::Times;
        n->arity = std::max(a.arity(), b.arity());
        n->uses_inverse = a.uses_inverse() || b.uses_inverse();
        n->left = std::move(a);
        n->right = std::move(b);
        return Term(n);
    }

    auto Term::prime(Term a) -> Term
    {
        auto n = std::make_shared<Node>();
        n->kind = TermKind::Prime;
        n->arity = a.arity();
        n->uses_inverse = true;
        n->left = std::move(a);
        return Term(n);
    }

    auto Term::circle(Term a) -> Term
    {
        auto n = std::make_shared<Node>();
        n->kind = TermKind::Circle;
        n->arity = a.arity();
        n->uses_inverse = true;
        n->left = std::move(a);
        return Term(n);
    }

    auto Term::kind() const -> TermKind
    {
        return _node->kind;
    }

    auto Term::variable_index() const -> int
    {
        return _node->variable;
    }

    auto Term::left() const -> const Term &
    {
        return *_node->left;
    }

    auto Term::right() const -> const Term &
    {
        return *_node->right;
    }

    auto Term::arity() const -> int
    {
        return _node->arity;
    }

    auto Term::uses_inverse() const -> bool
    {
        return _node->uses_inverse;
    }

    auto Term::collect_variables(vector<bool> & seen) const -> void
    {
        switch (kind()) {
            case TermKind::Variable:
                if (int(seen.size()) <= variable_index())
                    seen.resize(variable_index() + 1, false);
                seen[variable_index()] = true;
                break;
            case TermKind::Plus:
            case TermKind::Times:
                left().collect_variables(seen);
                right().collect_variables(seen);
                break;
            case TermKind::Prime:
            case TermKind::Circle:
                left().collect_variables(seen);
                break;
        }
    }

    auto operator+ (const Term & a, const Term & b) -> Term
    {
        return Term::plus(a, b);
    }

    auto operator* (const Term & a, const Term & b) -> Term
    {
        return Term::times(a, b);
    }

    namespace
    {
        const string variable_letters = "xyzwuv";

        // 1 = sum, 2 = product, 3 = postfix, 4 = atom
        auto print(std::ostream & out, const Term & t, int context) -> void
        {
            switch (t.kind()) {
                case TermKind::Variable:
                    out << variable_name(t.variable_index());
                    break;

                case TermKind::Plus:
                    if (context > 1) out << '(';
                    print(out, t.left(), 1);
                    out << " + ";
                    print(out, t.right(), 2);
                    if (context > 1) out << ')';
                    break;

                case TermKind::Circle:
                    if (context > 1) out << '(';
                    print(out, t.left(), 1);
                    out << " + ";
                    print(out, t.left(), 3);
                    out << '\'';
                    if (context > 1) out << ')';
                    break;

                case TermKind::Times:
                    if (context > 2) out << '(';
                    print(out, t.left(), 2);
                    out << '*';
                    print(out, t.right(), 3);
                    if (context > 2) out << ')';
                    break;

                case TermKind::Prime:
                    print(out, t.left(), 3);
                    out << '\'';
                    break;
            }
        }

        class Parser
        {
            private:
                string_view _text;
                std::size_t _at = 0;

            public:
                explicit Parser(string_view text) : _text(text) {}

                auto fail(const string & what) const -> void
                {
                    throw Error("term syntax: " + what + " at column " + std::to_string(_at + 1) + " in '" + string(_text) + "'");
                }

                auto skip() -> void
                {
                    while (_at < _text.size() && std::isspace(static_cast<unsigned char>(_text[_at])))
                        ++_at;
                }

                auto peek() -> char
                {
                    skip();
                    return _at < _text.size() ? _text[_at] : '\0';
                }

                auto done() -> bool
                {
                    return peek() == '\0';
                }

                auto expect(char c) -> void
                {
                    if (peek() != c)
                        fail(string("expected '") + c + "'");
                    ++_at;
                }

                auto sum() -> Term
                {
                    auto t = product();
                    while (peek() == '+') {
                        ++_at;
                        t = Term::plus(t, product());
                    }
                    return t;
                }

                auto product() -> Term
                {
                    auto t = postfix();
                    while (peek() == '*') {
                        ++_at;
                        t = Term::times(t, postfix());
                    }
                    return t;
                }

                auto postfix() -> Term
                {
                    auto t = atom();
                    while (peek() == '\'') {
                        ++_at;
                        t = Term::prime(t);
                    }
                    return t;
                }

                auto atom() -> Term
                {
                    char c = peek();
                    if (c == '(') {
                        ++_at;
                        auto t = sum();
                        expect(')');
                        return t;
                    }
                    if (c == 'o') {
                        ++_at;
                        expect('(');
                        auto t = sum();
                        expect(')');
                        return Term::plus(t, Term::prime(t));
                    }
                    auto pos = variable_letters.find(c);
                    if (c == '\0' || pos == string::npos)
                        fail("expected a variable, '(' or 'o('");
                    ++_at;
                    return Term::variable(int(pos));
                }
        };
    }

    auto variable_name(int index) -> string
    {
        if (index >= 0 && index < int(variable_letters.size()))
            return string(1, variable_letters[index]);
        return "v" + std::to_string(index);
    }

    auto to_string(const Term & t) -> string
    {
        std::ostringstream out;
        print(out, t, 1);
        return out.str();
    }

    auto parse_term(string_view text) -> Term
    {
        Parser p(text);
        auto t = p.sum();
        if (! p.done())
            p.fail("unexpected trailing input");
        return t;
    }

    auto eval_term(const Semiring & s, const Term & t, const Assignment & assignment) -> Element
    {
        switch (t.kind()) {
            case TermKind::Variable:
                if (t.variable_index() >= int(assignment.size()))
                    throw Error("unbound variable " + variable_name(t.variable_index()));
                return assignment[t.variable_index()];
            case TermKind::Plus:
                return s.add(eval_term(s, t.left(), assignment), eval_term(s, t.right(), assignment));
            case TermKind::Times:
                return s.mul(eval_term(s, t.left(), assignment), eval_term(s, t.right(), assignment));
            case TermKind::Prime:
                return s.inverse(eval_term(s, t.left(), assignment));
            case TermKind::Circle:
                return s.circle(eval_term(s, t.left(), assignment));
        }
        throw Error("unreachable term kind");
    }

    Identity::Identity(Term lhs, Term rhs, string name) :
        _lhs(std::move(lhs)),
        _rhs(std::move(rhs)),
        _name(std::move(name))
    {
        vector<bool> seen;
        _lhs.collect_variables(seen);
        _rhs.collect_variables(seen);
        for (std::size_t i = 0 ; i < seen.size() ; ++i)
            if (! seen[i])
                throw Error("identity variables must be contiguous from x; " + variable_name(int(i)) + " is unused in "
                        + to_string(_lhs) + " = " + to_string(_rhs));
        _arity = int(seen.size());
    }

    auto Identity::uses_inverse() const -> bool
    {
        return _lhs.uses_inverse() || _rhs.uses_inverse();
    }

    auto to_string(const Identity & id) -> string
    {
        return to_string(id.lhs()) + " = " + to_string(id.rhs());
    }

    auto parse_identity(string_view text, string name) -> Identity
    {
        auto eq = text.find('=');
        if (eq == string_view::npos || text.find('=', eq + 1) != string_view::npos)
            throw Error("identity needs exactly one '=': '" + string(text) + "'");
        return Identity(parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1)), std::move(name));
    }

    auto find_counterexample(const Semiring & s, const Identity & id) -> optional<Assignment>
    {
        if (id.uses_inverse() && ! s.has_pseudo_inverse())
            throw MissingInverse();

        int k = id.arity(), n = s.order();
        Assignment a(k, 0);
        while (true) {
            if (eval_term(s, id.lhs(), a) != eval_term(s, id.rhs(), a))
                return a;
            // odometer, last variable fastest
            int i = k - 1;
            while (i >= 0 && a[i] == n - 1)
                a[i--] = 0;
            if (i < 0)
                return std::nullopt;
            ++a[i];
        }
    }

    auto satisfies(const Semiring & s, const Identity & id) -> bool
    {
        return ! find_counterexample(s, id).has_value();
    }

    auto format_assignment(const Assignment & a) -> string
    {
        string result = "{";
        for (std::size_t i = 0 ; i < a.size() ; ++i)
            result += (i ? "," : "") + variable_name(int(i)) + "->" + std::to_string(a[i]);
        return result + "}";
    }

    auto convention_name(Convention c) -> string
    {
        return c == Convention::Standard ? "standard" : "table1";
    }

    auto parse_convention(string_view s) -> Convention
    {
        if (s == "standard")
            return Convention::Standard;
        if (s == "table1")
            return Convention::Table1;
        throw Error("unknown convention '" + string(s) + "' (expected standard or table1)");
    }

    namespace
    {
        auto id(const string & text, const string & name) -> Identity
        {
            return parse_identity(text, name);
        }

        auto within_i(const string & name, const string & description, vector<Identity> extra) -> VarietySpec
        {
            VarietySpec v{ name, description, { id("x + x = x", "additive idempotency"), id("x*x = x", "multiplicative idempotency") }, false, {} };
            v.identities.insert(v.identities.end(), extra.begin(), extra.end());
            return v;
        }

        auto with_inverse(const string & name, const string & description, vector<Identity> identities,
                vector<string> extra = {}) -> VarietySpec
        {
            return VarietySpec{ name, description, std::move(identities), true, std::move(extra) };
        }

        auto build_catalog(Convention convention) -> Catalog
        {
            Catalog c;
            auto add = [&] (VarietySpec v) { c.emplace(v.name, std::move(v)); };

            add(within_i("I", "idempotent semirings", {}));
            add(within_i("Sl+", "b-lattices (commutative addition)", { id("x + y = y + x", "additive commutativity") }));
            add(within_i("R+", "rectangular additive reduct", { id("x + y + x = x", "R+") }));
            add(within_i("R*", "rectangular multiplicative reduct", { id("x*y*x = x", "R*") }));

            add(within_i("ProjL+", "left zero additive reduct", { id("x + y = x", "ProjL+") }));
            add(within_i("ProjR+", "right zero additive reduct", { id("x + y = y", "ProjR+") }));
            add(within_i("ProjL*", "left zero multiplicative reduct", { id("x*y = x", "ProjL*") }));
            add(within_i("ProjR*", "right zero multiplicative reduct", { id("x*y = y", "ProjR*") }));

            bool standard = convention == Convention::Standard;
            add(within_i("LZ+", "left zero additive reduct", { id(standard ? "x + y = x" : "x + y = y", "LZ+") }));
            add(within_i("RZ+", "right zero additive reduct", { id(standard ? "x + y = y" : "x + y = x", "RZ+") }));
            add(within_i("LZ*", "left zero multiplicative reduct", { id(standard ? "x*y = x" : "x*y = y", "LZ*") }));
            add(within_i("RZ*", "right zero multiplicative reduct", { id(standard ? "x*y = y" : "x*y = x", "RZ*") }));

            add(within_i("BI", "band semirings", { id("x + x*y + x = x", "BI left"), id("x + y*x + x = x", "BI right") }));
            add(within_i("LQBI", "left quasi band semirings", { id("x + x*y + x = x", "LQBI") }));
            add(within_i("RQBI", "right quasi band semirings", { id("x + y*x + x = x", "RQBI") }));
            add(within_i("N", "normal band semirings", { id("x + x*y*x + x = x", "N") }));
            add(within_i("LN", "left normal band semirings", { id("x + x*y*x = x", "LN") }));
            add(within_i("RN", "right normal band semirings", { id("x*y*x + x = x", "RN") }));
            add(within_i("LBI", "left band semirings", { id("x = x + y*x*y", "LBI") }));
            add(within_i("RBI", "right band semirings", { id("x = y*x*y + x", "RBI") }));
            add(within_i("D", "distributive lattices", {
                        id("x + y = y + x", "additive commutativity"),
                        id("x*y = y*x", "multiplicative commutativity"),
                        id("x + x*y = x", "absorption"),
                        id("x*(x + y) = x", "dual absorption") }));

            vector<Identity> cr = {
                id("x = x + x' + x", "x = x+x'+x"),
                id("x + x' = x' + x", "x+x' = x'+x"),
                id("x'' = x", "x'' = x"),
                id("x + o(y) + o(x) + y = o(x) + y + x + o(y)", "H+ classes abelian"),
                id("x*o(x) = o(x)", "x x0 = x0") };
            add(with_inverse("CR", "completely regular semirings (unions of rings)", cr));

            add(with_inverse("Ri", "rings", {
                        id("x + y = y + x", "additive commutativity"),
                        id("o(x) + y = y", "additive identity"),
                        id("x + x' + x = x", "inverse") }));

            vector<Identity> wc = cr;
            wc.push_back(id("x + y = y + x", "additive commutativity"));
            wc.push_back(id("x*(x + x') = x + x'", "a(a+a') = a+a'"));
            wc.push_back(id("x*o(y) = o(y)*x", "a(b+b') = (b+b')a"));
            wc.push_back(id("x + x*o(y) = x", "a + a(b+b') = a"));
            add(with_inverse("WC", "weak Clifford semirings (distributive lattices of rings)", wc));
            add(with_inverse("Clifford", "Clifford semirings", wc, { "k-ideal(E+)" }));

            return c;
        }
    }

    auto catalog(Convention convention) -> const Catalog &
    {
        static const Catalog standard = build_catalog(Convention::Standard);
        static const Catalog table1 = build_catalog(Convention::Table1);
        return convention == Convention::Standard ? standard : table1;
    }

    auto variety(const string & name, Convention convention) -> const VarietySpec &
    {
        auto & c = catalog(convention);
        auto it = c.find(name);
        if (it == c.end())
            throw Error("unknown variety '" + name + "'");
        return it->second;
    }
}
