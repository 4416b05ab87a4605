#include <semiring/core.hh>

#include <algorithm>
#include <mutex>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace semiring
{
    MissingInverse::MissingInverse() :
        Error("operation needs the additive pseudo-inverse, but (S, +) is not a union of groups")
    {
    }

    OpTable::OpTable(int order, vector<Element> entries) :
        _order(order),
        _entries(std::move(entries))
    {
        if (order < 1)
            throw Error("table order must be positive");
        if (_entries.size() != std::size_t(order) * std::size_t(order))
            throw Error("table of order " + std::to_string(order) + " needs " + std::to_string(order * order)
                    + " entries, got " + std::to_string(_entries.size()));
        for (auto e : _entries)
            if (e < 0 || e >= order)
                throw Error("table entry " + std::to_string(e) + " out of range for order " + std::to_string(order));
    }

    auto OpTable::row(Element a) const -> std::span<const Element>
    {
        return std::span<const Element>(_entries).subspan(a * _order, _order);
    }

    auto OpTable::is_associative() const -> bool
    {
        for (Element a = 0 ; a < _order ; ++a)
            for (Element b = 0 ; b < _order ; ++b)
                for (Element c = 0 ; c < _order ; ++c)
                    if (at(at(a, b), c) != at(a, at(b, c)))
                        return false;
        return true;
    }

    auto OpTable::is_commutative() const -> bool
    {
        for (Element a = 0 ; a < _order ; ++a)
            for (Element b = a + 1 ; b < _order ; ++b)
                if (at(a, b) != at(b, a))
                    return false;
        return true;
    }

    auto OpTable::is_idempotent() const -> bool
    {
        for (Element a = 0 ; a < _order ; ++a)
            if (at(a, a) != a)
                return false;
        return true;
    }

    auto Violation::to_string() const -> string
    {
        std::ostringstream out;
        out << axiom << " (";
        for (std::size_t i = 0 ; i < witness.size() ; ++i)
            out << (i ? " " : "") << witness[i];
        out << ")";
        return out.str();
    }

    auto compute_pseudo_inverse(const OpTable & add) -> optional<vector<Element>>
    {
        int n = add.order();
        vector<Element> inv(n);
        for (Element x = 0 ; x < n ; ++x) {
            // multiples[k] = (k + 1) x
            vector<Element> multiples{ x };
            int period = 0;
            for (int k = 1 ; k <= n ; ++k) {
                multiples.push_back(add.at(multiples.back(), x));
                if (multiples.back() == x) {
                    period = k;
                    break;
                }
            }
            if (0 == period)
                return std::nullopt;
            // x lies in the cyclic group of order `period`; its inverse is (2 period - 1) x
            Element y = x;
            for (int k = 1 ; k < 2 * period - 1 ; ++k)
                y = add.at(y, x);
            inv[x] = y;
        }
        return inv;
    }

    struct Semiring::Impl
    {
        OpTable add, mul;
        mutable std::once_flag inverse_once;
        mutable optional<vector<Element>> inverse;
        bool inverse_supplied = false;
    };

    Semiring::Semiring(std::shared_ptr<const Impl> imp) :
        _imp(std::move(imp))
    {
    }

    namespace
    {
        auto check_tables(const OpTable & add, const OpTable & mul, vector<Violation> & violations) -> bool
        {
            if (add.order() != mul.order()) {
                violations.push_back({ "dimension-mismatch", { add.order(), mul.order() } });
                return false;
            }

            int n = add.order();
            for (Element x = 0 ; x < n ; ++x)
                for (Element y = 0 ; y < n ; ++y)
                    for (Element z = 0 ; z < n ; ++z) {
                        if (add.at(add.at(x, y), z) != add.at(x, add.at(y, z)))
                            violations.push_back({ "additive-associativity", { x, y, z } });
                        if (mul.at(mul.at(x, y), z) != mul.at(x, mul.at(y, z)))
                            violations.push_back({ "multiplicative-associativity", { x, y, z } });
                        if (mul.at(x, add.at(y, z)) != add.at(mul.at(x, y), mul.at(x, z)))
                            violations.push_back({ "left-distributivity", { x, y, z } });
                        if (mul.at(add.at(x, y), z) != add.at(mul.at(x, z), mul.at(y, z)))
                            violations.push_back({ "right-distributivity", { x, y, z } });
                    }
            return true;
        }
    }

    auto Semiring::validate(const OpTable & add, const OpTable & mul) -> ValidationResult
    {
        ValidationResult result;
        check_tables(add, mul, result.violations);
        if (result.violations.empty()) {
            auto imp = std::make_shared<Impl>();
            imp->add = add;
            imp->mul = mul;
            result.semiring = Semiring(std::move(imp));
        }
        return result;
    }

    auto Semiring::validate(const OpTable & add, const OpTable & mul, const vector<Element> & inverse) -> ValidationResult
    {
        ValidationResult result;
        if (! check_tables(add, mul, result.violations))
            return result;

        int n = add.order();
        if (inverse.size() != std::size_t(n)) {
            result.violations.push_back({ "inverse-length", { int(inverse.size()) } });
            return result;
        }
        for (auto e : inverse)
            if (e < 0 || e >= n) {
                result.violations.push_back({ "inverse-range", { e } });
                return result;
            }

        for (Element x = 0 ; x < n ; ++x) {
            Element xi = inverse[x];
            if (add.at(add.at(x, xi), x) != x)
                result.violations.push_back({ "x = x+x'+x", { x } });
            if (add.at(x, xi) != add.at(xi, x))
                result.violations.push_back({ "x+x' = x'+x", { x } });
            if (inverse[xi] != x)
                result.violations.push_back({ "x'' = x", { x } });
        }

        auto computed = compute_pseudo_inverse(add);
        if (! computed)
            result.violations.push_back({ "inverse-not-completely-regular", {} });
        else
            for (Element x = 0 ; x < n ; ++x)
                if ((*computed)[x] != inverse[x])
                    result.violations.push_back({ "inverse-mismatch", { x, inverse[x], (*computed)[x] } });

        if (result.violations.empty()) {
            auto imp = std::make_shared<Impl>();
            imp->add = add;
            imp->mul = mul;
            imp->inverse = inverse;
            imp->inverse_supplied = true;
            result.semiring = Semiring(std::move(imp));
        }
        return result;
    }

    auto Semiring::from_tables(const OpTable & add, const OpTable & mul) -> Semiring
    {
        auto result = validate(add, mul);
        if (! result.ok()) {
            string message = "not a semiring:";
            for (std::size_t i = 0 ; i < result.violations.size() && i < 5 ; ++i)
                message += " " + result.violations[i].to_string();
            if (result.violations.size() > 5)
                message += " ... (" + std::to_string(result.violations.size()) + " violations)";
            throw Error(message);
        }
        return *result.semiring;
    }

    auto Semiring::order() const -> int
    {
        return _imp->add.order();
    }

    auto Semiring::add_table() const -> const OpTable &
    {
        return _imp->add;
    }

    auto Semiring::mul_table() const -> const OpTable &
    {
        return _imp->mul;
    }

    auto Semiring::pseudo_inverse() const -> const optional<vector<Element>> &
    {
        std::call_once(_imp->inverse_once, [&] {
            if (! _imp->inverse_supplied)
                _imp->inverse = compute_pseudo_inverse(_imp->add);
        });
        return _imp->inverse;
    }

    auto Semiring::inverse(Element a) const -> Element
    {
        auto & inv = pseudo_inverse();
        if (! inv)
            throw MissingInverse();
        return (*inv)[a];
    }

    auto Semiring::circle(Element a) const -> Element
    {
        return add(a, inverse(a));
    }

    auto Semiring::elements() const -> vector<Element>
    {
        vector<Element> result(order());
        for (Element a = 0 ; a < order() ; ++a)
            result[a] = a;
        return result;
    }

    auto Semiring::operator<=> (const Semiring & other) const -> std::strong_ordering
    {
        if (auto c = order() <=> other.order() ; c != 0)
            return c;
        if (auto c = add_table() <=> other.add_table() ; c != 0)
            return c;
        return mul_table() <=> other.mul_table();
    }

    auto Semiring::operator== (const Semiring & other) const -> bool
    {
        return add_table() == other.add_table() && mul_table() == other.mul_table();
    }

    SubsetView::SubsetView(Semiring parent, vector<Element> members) :
        _parent(std::move(parent)),
        _members(std::move(members))
    {
        std::sort(_members.begin(), _members.end());
        _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
        for (auto m : _members)
            if (m < 0 || m >= _parent.order())
                throw Error("subset member " + std::to_string(m) + " outside the carrier");
    }

    auto SubsetView::contains(Element a) const -> bool
    {
        return std::binary_search(_members.begin(), _members.end(), a);
    }

    auto SubsetView::closed_under_add() const -> bool
    {
        for (auto a : _members)
            for (auto b : _members)
                if (! contains(_parent.add(a, b)))
                    return false;
        return true;
    }

    auto SubsetView::closed_under_mul() const -> bool
    {
        for (auto a : _members)
            for (auto b : _members)
                if (! contains(_parent.mul(a, b)))
                    return false;
        return true;
    }

    auto SubsetView::as_semiring() const -> Semiring
    {
        if (_members.empty())
            throw PreconditionError("empty subset is not a subsemiring");
        if (! closed_under_add() || ! closed_under_mul())
            throw PreconditionError("subset is not closed under both operations");

        int k = int(_members.size());
        auto index_of = [&] (Element a) {
            return Element(std::lower_bound(_members.begin(), _members.end(), a) - _members.begin());
        };
        vector<Element> add(k * k), mul(k * k);
        for (int i = 0 ; i < k ; ++i)
            for (int j = 0 ; j < k ; ++j) {
                add[i * k + j] = index_of(_parent.add(_members[i], _members[j]));
                mul[i * k + j] = index_of(_parent.mul(_members[i], _members[j]));
            }
        return Semiring::from_tables(OpTable(k, std::move(add)), OpTable(k, std::move(mul)));
    }

    auto additive_idempotents(const Semiring & s) -> SubsetView
    {
        vector<Element> members;
        for (Element e = 0 ; e < s.order() ; ++e)
            if (s.add(e, e) == e)
                members.push_back(e);
        return SubsetView(s, std::move(members));
    }

    auto is_idempotent_semiring(const Semiring & s) -> bool
    {
        return s.add_table().is_idempotent() && s.mul_table().is_idempotent();
    }
}
