#include <semiring/classify.hh>
#include <semiring/structure.hh>

#include <algorithm>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace semiring
{
    Morphism::Morphism(Semiring source, Semiring target, vector<Element> map) :
        _source(std::move(source)),
        _target(std::move(target)),
        _map(std::move(map)),
        _hom(true),
        _injective(true),
        _surjective(true)
    {
        int n = _source.order(), m = _target.order();
        if (int(_map.size()) != n)
            throw Error("morphism map has " + std::to_string(_map.size()) + " entries for a source of order " + std::to_string(n));
        for (auto v : _map)
            if (v < 0 || v >= m)
                throw Error("morphism image " + std::to_string(v) + " outside the target carrier");

        for (Element a = 0 ; a < n && _hom ; ++a)
            for (Element b = 0 ; b < n ; ++b)
                if (_map[_source.add(a, b)] != _target.add(_map[a], _map[b])
                        || _map[_source.mul(a, b)] != _target.mul(_map[a], _map[b])) {
                    _hom = false;
                    break;
                }

        vector<char> hit(m, 0);
        for (auto v : _map) {
            if (hit[v])
                _injective = false;
            hit[v] = 1;
        }
        _surjective = std::all_of(hit.begin(), hit.end(), [] (char c) { return c != 0; });
    }

    auto Morphism::to_string() const -> string
    {
        string result;
        for (std::size_t a = 0 ; a < _map.size() ; ++a)
            result += (a ? " " : "") + std::to_string(a) + "->" + std::to_string(_map[a]);
        return result;
    }

    auto quotient(const Congruence & c) -> Quotient
    {
        auto & s = c.parent();
        auto & p = c.partition();
        int k = p.block_count();
        vector<Element> add(k * k), mul(k * k);
        for (int i = 0 ; i < k ; ++i)
            for (int j = 0 ; j < k ; ++j) {
                Element a = p.blocks()[i].front(), b = p.blocks()[j].front();
                add[i * k + j] = p.block_of(s.add(a, b));
                mul[i * k + j] = p.block_of(s.mul(a, b));
            }
        auto algebra = Semiring::from_tables(OpTable(k, std::move(add)), OpTable(k, std::move(mul)));
        Morphism projection(s, algebra, p.labels());
        if (! projection.is_hom() || ! projection.surjective())
            throw Error("quotient projection is not a surjective homomorphism");
        return Quotient{ algebra, projection };
    }

    auto induced_map(const Quotient & finer, const Quotient & coarser) -> Morphism
    {
        auto & source = finer.projection.source();
        if (source != coarser.projection.source())
            throw PreconditionError("induced map needs two quotients of the same semiring");
        vector<Element> map(finer.algebra.order(), -1);
        for (Element a = 0 ; a < source.order() ; ++a) {
            Element from = finer.projection(a), to = coarser.projection(a);
            if (map[from] == -1)
                map[from] = to;
            else if (map[from] != to)
                throw PreconditionError("first congruence does not refine the second");
        }
        return Morphism(finer.algebra, coarser.algebra, std::move(map));
    }

    auto direct_product(const Semiring & s, const Semiring & t, int cap) -> Semiring
    {
        int n = s.order(), m = t.order();
        if (n * m > cap)
            throw CapExceeded("direct product of order " + std::to_string(n * m) + " exceeds the cap of " + std::to_string(cap));
        int k = n * m;
        vector<Element> add(k * k), mul(k * k);
        for (Element a = 0 ; a < n ; ++a)
            for (Element b = 0 ; b < m ; ++b)
                for (Element c = 0 ; c < n ; ++c)
                    for (Element d = 0 ; d < m ; ++d) {
                        int x = a * m + b, y = c * m + d;
                        add[x * k + y] = s.add(a, c) * m + t.add(b, d);
                        mul[x * k + y] = s.mul(a, c) * m + t.mul(b, d);
                    }
        return Semiring::from_tables(OpTable(k, std::move(add)), OpTable(k, std::move(mul)));
    }

    auto trivial_semiring() -> Semiring
    {
        return Semiring::from_tables(OpTable(1, { 0 }), OpTable(1, { 0 }));
    }

    auto SpinedProduct::index_of(Element a, Element b) const -> optional<Element>
    {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), pair{ a, b });
        if (it == pairs.end() || *it != pair{ a, b })
            return std::nullopt;
        return Element(it - pairs.begin());
    }

    auto spined_product(const Morphism & f1, const Morphism & f2) -> SpinedProduct
    {
        if (f1.target() != f2.target())
            throw PreconditionError("spine maps must share their target");
        if (! f1.is_hom() || ! f1.surjective() || ! f2.is_hom() || ! f2.surjective())
            throw PreconditionError("spine maps must be surjective homomorphisms");

        auto & s1 = f1.source();
        auto & s2 = f2.source();
        vector<pair<Element, Element>> pairs;
        for (Element a = 0 ; a < s1.order() ; ++a)
            for (Element b = 0 ; b < s2.order() ; ++b)
                if (f1(a) == f2(b))
                    pairs.emplace_back(a, b);

        int k = int(pairs.size());
        SpinedProduct partial{ trivial_semiring(), pairs, f1, f2 };
        vector<Element> add(k * k), mul(k * k);
        for (int i = 0 ; i < k ; ++i)
            for (int j = 0 ; j < k ; ++j) {
                auto [a, b] = pairs[i];
                auto [c, d] = pairs[j];
                auto sum = partial.index_of(s1.add(a, c), s2.add(b, d));
                auto product = partial.index_of(s1.mul(a, c), s2.mul(b, d));
                if (! sum || ! product)
                    throw Error("spined product is not closed under the operations");
                add[i * k + j] = *sum;
                mul[i * k + j] = *product;
            }
        auto algebra = Semiring::from_tables(OpTable(k, std::move(add)), OpTable(k, std::move(mul)));

        vector<Element> first(k), second(k);
        for (int i = 0 ; i < k ; ++i) {
            first[i] = pairs[i].first;
            second[i] = pairs[i].second;
        }
        Morphism p1(algebra, s1, first), p2(algebra, s2, second);
        if (! p1.surjective() || ! p2.surjective() || ! p1.is_hom() || ! p2.is_hom())
            throw Error("spined product projections are not surjective homomorphisms");
        return SpinedProduct{ algebra, std::move(pairs), p1, p2 };
    }

    namespace
    {
        auto element_signature(const Semiring & s, Element a) -> vector<int>
        {
            int n = s.order();
            vector<int> sig(10, 0);
            sig[0] = s.add(a, a) == a;
            sig[1] = s.mul(a, a) == a;
            for (Element x = 0 ; x < n ; ++x) {
                sig[2] += s.add(a, x) == a;
                sig[3] += s.add(x, a) == a;
                sig[4] += s.mul(a, x) == a;
                sig[5] += s.mul(x, a) == a;
                sig[6] += s.add(x, x) == a;
                sig[7] += s.mul(x, x) == a;
                sig[8] += s.add(a, x) == x;
                sig[9] += s.mul(a, x) == x;
            }
            return sig;
        }

        struct IsoSearch
        {
            const Semiring & s;
            const Semiring & t;
            vector<vector<Element>> candidates;
            vector<Element> map;
            vector<char> used;

            auto consistent(Element a) const -> bool
            {
                // every table cell whose three entries are assigned, one of them being a
                for (Element x = 0 ; x <= a ; ++x)
                    for (Element y = 0 ; y <= a ; ++y) {
                        Element sum = s.add(x, y), product = s.mul(x, y);
                        bool fresh_sum = x == a || y == a || sum == a;
                        bool fresh_product = x == a || y == a || product == a;
                        if (fresh_sum && sum <= a && map[sum] != t.add(map[x], map[y]))
                            return false;
                        if (fresh_product && product <= a && map[product] != t.mul(map[x], map[y]))
                            return false;
                    }
                return true;
            }

            auto search(Element a) -> bool
            {
                if (a == s.order())
                    return true;
                for (auto b : candidates[a]) {
                    if (used[b])
                        continue;
                    map[a] = b;
                    used[b] = 1;
                    if (consistent(a) && search(a + 1))
                        return true;
                    used[b] = 0;
                }
                map[a] = -1;
                return false;
            }
        };
    }

    auto find_isomorphism(const Semiring & s, const Semiring & t, int cap) -> optional<Morphism>
    {
        if (s.order() > cap || t.order() > cap)
            throw CapExceeded("isomorphism search is capped at order " + std::to_string(cap));
        if (s.order() != t.order())
            return std::nullopt;

        int n = s.order();
        vector<vector<int>> sig_t(n);
        for (Element b = 0 ; b < n ; ++b)
            sig_t[b] = element_signature(t, b);

        IsoSearch search{ s, t, vector<vector<Element>>(n), vector<Element>(n, -1), vector<char>(n, 0) };
        for (Element a = 0 ; a < n ; ++a) {
            auto sig = element_signature(s, a);
            for (Element b = 0 ; b < n ; ++b)
                if (sig_t[b] == sig)
                    search.candidates[a].push_back(b);
            if (search.candidates[a].empty())
                return std::nullopt;
        }

        if (! search.search(0))
            return std::nullopt;
        Morphism result(s, t, search.map);
        if (! result.is_isomorphism())
            throw Error("isomorphism search produced a non-isomorphism");
        return result;
    }

    auto subdirect_decomposition(const Semiring & s, const SemiringPredicate & first, const SemiringPredicate & second,
            int cap) -> optional<SubdirectDecomposition>
    {
        auto congruences = all_congruences(s, cap);
        vector<char> ok1, ok2;
        for (auto & c : congruences) {
            auto q = quotient(c).algebra;
            ok1.push_back(first(q));
            ok2.push_back(second(q));
        }

        for (std::size_t i = 0 ; i < congruences.size() ; ++i) {
            if (! ok1[i])
                continue;
            for (std::size_t j = 0 ; j < congruences.size() ; ++j) {
                if (! ok2[j])
                    continue;
                auto & p1 = congruences[i].partition();
                auto & p2 = congruences[j].partition();
                if (! p1.meet(p2).is_identity())
                    continue;

                vector<pair<int, int>> images;
                for (Element a = 0 ; a < s.order() ; ++a)
                    images.emplace_back(p1.block_of(a), p2.block_of(a));
                std::sort(images.begin(), images.end());
                if (std::adjacent_find(images.begin(), images.end()) != images.end())
                    throw Error("subdirect embedding is not injective despite a trivial meet");
                return SubdirectDecomposition{ congruences[i], congruences[j] };
            }
        }
        return std::nullopt;
    }

    auto is_subtractive(const SubsetView & subset) -> bool
    {
        auto & s = subset.parent();
        for (Element a = 0 ; a < s.order() ; ++a) {
            if (subset.contains(a))
                continue;
            for (auto b : subset.members())
                if (subset.contains(s.add(a, b)) || subset.contains(s.add(b, a)))
                    return false;
        }
        return true;
    }

    auto is_k_ideal(const SubsetView & subset) -> bool
    {
        auto & s = subset.parent();
        if (subset.size() == 0 || ! subset.closed_under_add())
            return false;
        for (Element a = 0 ; a < s.order() ; ++a)
            for (auto b : subset.members())
                if (! subset.contains(s.mul(a, b)) || ! subset.contains(s.mul(b, a)))
                    return false;
        return is_subtractive(subset);
    }

    auto absorbed_elements_idempotent(const Semiring & s) -> bool
    {
        for (Element a = 0 ; a < s.order() ; ++a) {
            if (s.add(a, a) == a)
                continue;
            for (Element b = 0 ; b < s.order() ; ++b)
                if (s.add(a, b) == b)
                    return false;
        }
        return true;
    }
}
