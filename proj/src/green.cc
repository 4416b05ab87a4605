#include <semiring/green.hh>

#include <algorithm>
#include <numeric>

using std::string;
using std::vector;

namespace semiring
{
    Relation::Relation(int order) :
        _order(order),
        _bits(std::size_t(order) * order, 0)
    {
    }

    auto Relation::identity(int order) -> Relation
    {
        Relation r(order);
        for (Element a = 0 ; a < order ; ++a)
            r.set(a, a);
        return r;
    }

    auto Relation::is_reflexive() const -> bool
    {
        for (Element a = 0 ; a < _order ; ++a)
            if (! (*this)(a, a))
                return false;
        return true;
    }

    auto Relation::is_symmetric() const -> bool
    {
        for (Element a = 0 ; a < _order ; ++a)
            for (Element b = 0 ; b < _order ; ++b)
                if ((*this)(a, b) != (*this)(b, a))
                    return false;
        return true;
    }

    auto Relation::is_transitive() const -> bool
    {
        for (Element a = 0 ; a < _order ; ++a)
            for (Element b = 0 ; b < _order ; ++b)
                if ((*this)(a, b))
                    for (Element c = 0 ; c < _order ; ++c)
                        if ((*this)(b, c) && ! (*this)(a, c))
                            return false;
        return true;
    }

    auto Relation::is_antisymmetric() const -> bool
    {
        for (Element a = 0 ; a < _order ; ++a)
            for (Element b = 0 ; b < _order ; ++b)
                if (a != b && (*this)(a, b) && (*this)(b, a))
                    return false;
        return true;
    }

    auto Relation::is_equivalence() const -> bool
    {
        return is_reflexive() && is_symmetric() && is_transitive();
    }

    auto Relation::subset_of(const Relation & other) const -> bool
    {
        for (std::size_t i = 0 ; i < _bits.size() ; ++i)
            if (_bits[i] && ! other._bits[i])
                return false;
        return true;
    }

    auto Relation::compose(const Relation & other) const -> Relation
    {
        Relation result(_order);
        for (Element a = 0 ; a < _order ; ++a)
            for (Element b = 0 ; b < _order ; ++b)
                if ((*this)(a, b))
                    for (Element c = 0 ; c < _order ; ++c)
                        if (other(b, c))
                            result.set(a, c);
        return result;
    }

    auto Relation::transitive_closure() const -> Relation
    {
        Relation result = *this;
        // Warshall
        for (Element k = 0 ; k < _order ; ++k)
            for (Element a = 0 ; a < _order ; ++a)
                if (result(a, k))
                    for (Element b = 0 ; b < _order ; ++b)
                        if (result(k, b))
                            result.set(a, b);
        return result;
    }

    auto Relation::to_partition() const -> Partition
    {
        if (! is_equivalence())
            throw PreconditionError("relation is not an equivalence");
        vector<int> labels(_order);
        for (Element a = 0 ; a < _order ; ++a)
            for (Element b = 0 ; b <= a ; ++b)
                if ((*this)(a, b)) {
                    labels[a] = b;
                    break;
                }
        return Partition(labels);
    }

    auto Relation::to_string() const -> string
    {
        string result;
        for (Element a = 0 ; a < _order ; ++a)
            for (Element b = 0 ; b < _order ; ++b)
                if ((*this)(a, b)) {
                    if (! result.empty())
                        result += ' ';
                    result += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                }
        return result;
    }

    Partition::Partition(const vector<int> & labels) :
        _block_of(labels.size())
    {
        vector<std::pair<int, int>> renumber;
        for (std::size_t a = 0 ; a < labels.size() ; ++a) {
            auto it = std::find_if(renumber.begin(), renumber.end(), [&] (const auto & p) { return p.first == labels[a]; });
            int block;
            if (it == renumber.end()) {
                block = int(renumber.size());
                renumber.emplace_back(labels[a], block);
                _blocks.emplace_back();
            }
            else
                block = it->second;
            _block_of[a] = block;
            _blocks[block].push_back(Element(a));
        }
    }

    auto Partition::identity(int order) -> Partition
    {
        vector<int> labels(order);
        std::iota(labels.begin(), labels.end(), 0);
        return Partition(labels);
    }

    auto Partition::universal(int order) -> Partition
    {
        return Partition(vector<int>(order, 0));
    }

    auto Partition::refines(const Partition & other) const -> bool
    {
        for (auto & block : _blocks)
            for (auto a : block)
                if (other.block_of(a) != other.block_of(block.front()))
                    return false;
        return true;
    }

    auto Partition::meet(const Partition & other) const -> Partition
    {
        vector<int> labels(order());
        for (Element a = 0 ; a < order() ; ++a)
            labels[a] = _block_of[a] * other.block_count() + other.block_of(a);
        return Partition(labels);
    }

    auto Partition::join(const Partition & other) const -> Partition
    {
        vector<int> parent(order());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&] (int a) {
            while (parent[a] != a)
                a = parent[a] = parent[parent[a]];
            return a;
        };
        auto unite = [&] (int a, int b) {
            a = find(a), b = find(b);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        };
        for (auto & block : _blocks)
            for (auto a : block)
                unite(a, block.front());
        for (auto & block : other._blocks)
            for (auto a : block)
                unite(a, block.front());
        vector<int> labels(order());
        for (Element a = 0 ; a < order() ; ++a)
            labels[a] = find(a);
        return Partition(labels);
    }

    auto Partition::to_relation() const -> Relation
    {
        Relation r(order());
        for (auto & block : _blocks)
            for (auto a : block)
                for (auto b : block)
                    r.set(a, b);
        return r;
    }

    auto Partition::to_string() const -> string
    {
        string result = "{";
        for (std::size_t i = 0 ; i < _blocks.size() ; ++i) {
            result += i ? ",{" : "{";
            for (std::size_t j = 0 ; j < _blocks[i].size() ; ++j)
                result += (j ? "," : "") + std::to_string(_blocks[i][j]);
            result += "}";
        }
        return result + "}";
    }

    namespace
    {
        // characteristic vectors, so that equal ideals compare equal
        using Ideal = vector<char>;

        auto label_by_ideal(const vector<Ideal> & ideals) -> Partition
        {
            vector<int> labels(ideals.size());
            for (std::size_t a = 0 ; a < ideals.size() ; ++a)
                for (std::size_t b = 0 ; b <= a ; ++b)
                    if (ideals[a] == ideals[b]) {
                        labels[a] = int(b);
                        break;
                    }
            return Partition(labels);
        }
    }

    auto green(const OpTable & t) -> GreenRelations
    {
        if (! t.is_associative())
            throw PreconditionError("Green's relations need an associative table");

        int n = t.order();
        vector<Ideal> left(n, Ideal(n, 0)), right(n, Ideal(n, 0)), two_sided(n, Ideal(n, 0));
        for (Element a = 0 ; a < n ; ++a) {
            left[a][a] = right[a][a] = two_sided[a][a] = 1;
            for (Element s = 0 ; s < n ; ++s) {
                left[a][t.at(s, a)] = 1;
                right[a][t.at(a, s)] = 1;
                two_sided[a][t.at(s, a)] = 1;
                two_sided[a][t.at(a, s)] = 1;
                for (Element u = 0 ; u < n ; ++u)
                    two_sided[a][t.at(t.at(s, a), u)] = 1;
            }
        }

        auto L = label_by_ideal(left);
        auto R = label_by_ideal(right);
        auto J = label_by_ideal(two_sided);
        auto H = L.meet(R);
        auto D = L.join(R);
        return GreenRelations{ L, R, H, D, J };
    }

    namespace
    {
        auto require_idempotent(const Semiring & s, const char * what) -> void
        {
            if (! is_idempotent_semiring(s))
                throw PreconditionError(string(what) + " needs an idempotent semiring");
        }
    }

    auto band_l_formula(const Semiring & s) -> Relation
    {
        require_idempotent(s, "the band L+ formula");
        Relation r(s.order());
        for (Element a = 0 ; a < s.order() ; ++a)
            for (Element b = 0 ; b < s.order() ; ++b)
                r.set(a, b, s.add(a, b) == a && s.add(b, a) == b);
        return r;
    }

    auto band_r_formula(const Semiring & s) -> Relation
    {
        require_idempotent(s, "the band R+ formula");
        Relation r(s.order());
        for (Element a = 0 ; a < s.order() ; ++a)
            for (Element b = 0 ; b < s.order() ; ++b)
                r.set(a, b, s.add(a, b) == b && s.add(b, a) == a);
        return r;
    }

    auto band_d_formula(const Semiring & s) -> Relation
    {
        require_idempotent(s, "the band D+ formula");
        Relation r(s.order());
        for (Element a = 0 ; a < s.order() ; ++a)
            for (Element b = 0 ; b < s.order() ; ++b)
                r.set(a, b, s.add(s.add(a, b), a) == a && s.add(s.add(b, a), b) == b);
        return r;
    }

    auto band_d_check(const Semiring & s) -> bool
    {
        auto formula = band_d_formula(s);
        return formula == green(s.add_table()).D.to_relation();
    }

    auto quasi_orders(const Semiring & s) -> QuasiOrders
    {
        require_idempotent(s, "the natural quasi-orders");
        int n = s.order();
        QuasiOrders q{ Relation(n), Relation(n), Relation(n), Relation(n), Relation(n), Relation(n) };
        for (Element a = 0 ; a < n ; ++a)
            for (Element b = 0 ; b < n ; ++b) {
                q.left_add.set(a, b, b == s.add(a, b));
                q.right_add.set(a, b, b == s.add(b, a));
                q.left_mul.set(a, b, a == s.mul(b, a));
                q.right_mul.set(a, b, a == s.mul(a, b));
                q.add.set(a, b, q.left_add(a, b) && q.right_add(a, b));
                q.mul.set(a, b, q.left_mul(a, b) && q.right_mul(a, b));
            }
        return q;
    }
}
