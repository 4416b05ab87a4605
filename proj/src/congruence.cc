#include <semiring/classify.hh>
#include <semiring/congruence.hh>
#include <semiring/structure.hh>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace semiring
{
    Congruence::Congruence(Semiring s, Partition p) :
        _parent(std::move(s)),
        _partition(std::move(p))
    {
        if (_partition.order() != _parent.order())
            throw PreconditionError("partition order differs from semiring order");
        if (! is_congruence(_parent, _partition))
            throw PreconditionError("partition " + _partition.to_string() + " is not a congruence");
    }

    auto congruence_failure(const Semiring & s, const Partition & p) -> optional<vector<Element>>
    {
        int n = s.order();
        for (auto & block : p.blocks())
            for (std::size_t i = 1 ; i < block.size() ; ++i) {
                // comparing each member with the first suffices, by transitivity of p
                Element a = block.front(), b = block[i];
                for (Element c = 0 ; c < n ; ++c) {
                    if (! p.related(s.add(a, c), s.add(b, c)))
                        return vector<Element>{ a, b, c, 0 };
                    if (! p.related(s.add(c, a), s.add(c, b)))
                        return vector<Element>{ a, b, c, 1 };
                    if (! p.related(s.mul(a, c), s.mul(b, c)))
                        return vector<Element>{ a, b, c, 2 };
                    if (! p.related(s.mul(c, a), s.mul(c, b)))
                        return vector<Element>{ a, b, c, 3 };
                }
            }
        return std::nullopt;
    }

    auto is_congruence(const Semiring & s, const Partition & p) -> bool
    {
        return p.order() == s.order() && ! congruence_failure(s, p);
    }

    auto congruence_generated(const Semiring & s, const vector<pair<Element, Element>> & pairs) -> Congruence
    {
        int n = s.order();
        vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&] (int a) {
            while (parent[a] != a)
                a = parent[a] = parent[parent[a]];
            return a;
        };

        std::deque<pair<Element, Element>> pending(pairs.begin(), pairs.end());
        while (! pending.empty()) {
            auto [a, b] = pending.front();
            pending.pop_front();
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw PreconditionError("generating pair outside the carrier");
            int ra = find(a), rb = find(b);
            if (ra == rb)
                continue;
            parent[std::max(ra, rb)] = std::min(ra, rb);
            // every merged pair has its translates merged too, so the result is compatible
            for (Element c = 0 ; c < n ; ++c) {
                pending.emplace_back(s.add(a, c), s.add(b, c));
                pending.emplace_back(s.add(c, a), s.add(c, b));
                pending.emplace_back(s.mul(a, c), s.mul(b, c));
                pending.emplace_back(s.mul(c, a), s.mul(c, b));
            }
        }

        vector<int> labels(n);
        for (Element a = 0 ; a < n ; ++a)
            labels[a] = find(a);
        return Congruence(s, Partition(labels));
    }

    auto congruence_generated(const Semiring & s, const Partition & p) -> Congruence
    {
        vector<pair<Element, Element>> pairs;
        for (auto & block : p.blocks())
            for (std::size_t i = 1 ; i < block.size() ; ++i)
                pairs.emplace_back(block.front(), block[i]);
        return congruence_generated(s, pairs);
    }

    auto all_congruences(const Semiring & s, int cap) -> vector<Congruence>
    {
        int n = s.order();
        if (n > cap)
            throw CapExceeded("congruence lattice enumeration is capped at order " + std::to_string(cap)
                    + ", semiring has order " + std::to_string(n));

        std::set<Partition> principal;
        for (Element a = 0 ; a < n ; ++a)
            for (Element b = a + 1 ; b < n ; ++b)
                principal.insert(congruence_generated(s, vector<pair<Element, Element>>{ { a, b } }).partition());

        std::set<Partition> found{ Partition::identity(n) };
        vector<Partition> work{ Partition::identity(n) };
        while (! work.empty()) {
            auto p = work.back();
            work.pop_back();
            for (auto & q : principal) {
                auto j = p.join(q);
                if (found.insert(j).second)
                    work.push_back(j);
            }
        }

        vector<Partition> sorted(found.begin(), found.end());
        std::sort(sorted.begin(), sorted.end(), [] (const Partition & x, const Partition & y) {
            if (x.block_count() != y.block_count())
                return x.block_count() > y.block_count();
            return x < y;
        });

        vector<Congruence> result;
        result.reserve(sorted.size());
        for (auto & p : sorted)
            result.emplace_back(s, p);
        return result;
    }

    auto least_dl_congruence(const Semiring & s) -> Congruence
    {
        int n = s.order();
        vector<pair<Element, Element>> pairs;
        for (Element x = 0 ; x < n ; ++x) {
            pairs.emplace_back(s.add(x, x), x);
            pairs.emplace_back(s.mul(x, x), x);
            for (Element y = 0 ; y < n ; ++y) {
                pairs.emplace_back(s.add(x, y), s.add(y, x));
                pairs.emplace_back(s.mul(x, y), s.mul(y, x));
                pairs.emplace_back(s.add(x, s.mul(x, y)), x);
            }
        }
        auto result = congruence_generated(s, pairs);

        auto q = quotient(result).algebra;
        if (! in_variety(q, "D"))
            throw TheoremViolation("quotient by the generated congruence " + result.to_string() + " is not a distributive lattice");
        return result;
    }

    auto sigma(const Semiring & s) -> Relation
    {
        if (! is_idempotent_semiring(s))
            throw PreconditionError("sigma needs an idempotent semiring");
        int n = s.order();
        Relation r(n);
        auto half = [&] (Element a, Element b) {
            Element aba = s.mul(s.mul(a, b), a);
            return aba == s.add(s.add(aba, a), aba);
        };
        for (Element a = 0 ; a < n ; ++a)
            for (Element b = 0 ; b < n ; ++b)
                r.set(a, b, half(a, b) && half(b, a));
        return r;
    }

    auto eta_witness_relation(const Semiring & s) -> Relation
    {
        if (! is_idempotent_semiring(s))
            throw PreconditionError("eta needs an idempotent semiring");
        int n = s.order();
        Relation r(n);
        auto half = [&] (Element a, Element x, Element b) {
            Element axbxa = s.mul(s.mul(s.mul(s.mul(a, x), b), x), a);
            return axbxa == s.add(s.add(axbxa, a), axbxa);
        };
        for (Element a = 0 ; a < n ; ++a)
            for (Element b = 0 ; b < n ; ++b)
                for (Element x = 0 ; x < n ; ++x)
                    if (half(a, x, b) && half(b, x, a)) {
                        r.set(a, b);
                        break;
                    }
        return r;
    }

    auto eta(const Semiring & s) -> Congruence
    {
        auto closure = sigma(s).transitive_closure();
        if (! closure.is_equivalence())
            throw TheoremViolation("transitive closure of sigma is not an equivalence: " + closure.to_string());
        auto p = closure.to_partition();
        if (auto f = congruence_failure(s, p))
            throw TheoremViolation("transitive closure of sigma " + p.to_string() + " is not a congruence, witness ("
                    + std::to_string((*f)[0]) + "," + std::to_string((*f)[1]) + ") translated by " + std::to_string((*f)[2]));
        auto least = least_dl_congruence(s);
        if (least.partition() != p)
            throw TheoremViolation("transitive closure of sigma " + p.to_string()
                    + " differs from the least distributive lattice congruence " + least.to_string());
        return Congruence(s, p);
    }

    auto nu_plus_relation(const Semiring & s) -> Relation
    {
        if (! s.has_pseudo_inverse())
            throw MissingInverse();
        int n = s.order();
        Relation r(n);
        auto half = [&] (Element a, Element b) {
            Element a0 = s.circle(a);
            return a == s.add(s.add(a0, b), a0);
        };
        for (Element a = 0 ; a < n ; ++a)
            for (Element b = 0 ; b < n ; ++b)
                r.set(a, b, half(a, b) && half(b, a));
        return r;
    }

    namespace
    {
        auto is_b_lattice_of_rings(const Semiring & q) -> bool
        {
            return q.add_table().is_commutative() && is_completely_regular(q);
        }

        auto checked_congruence(const Semiring & s, const Relation & r, const string & name) -> Congruence
        {
            if (! r.is_equivalence())
                throw TheoremViolation(name + " is not an equivalence: " + r.to_string());
            auto p = r.to_partition();
            if (auto f = congruence_failure(s, p))
                throw TheoremViolation(name + " " + p.to_string() + " is not a congruence, witness ("
                        + std::to_string((*f)[0]) + "," + std::to_string((*f)[1]) + ") translated by " + std::to_string((*f)[2]));
            return Congruence(s, p);
        }
    }

    auto nu_plus(const Semiring & s) -> Congruence
    {
        if (! is_orthoring(s))
            throw PreconditionError("nu+ needs an orthoring");
        auto c = checked_congruence(s, nu_plus_relation(s), "nu+");
        if (! is_b_lattice_of_rings(quotient(c).algebra))
            throw TheoremViolation("quotient by nu+ " + c.to_string() + " is not a b-lattice of rings");
        return c;
    }

    auto nu_plus_leastness_counterexamples(const Semiring & s, int cap) -> vector<Congruence>
    {
        auto nu = nu_plus(s);
        vector<Congruence> result;
        for (auto & c : all_congruences(s, cap))
            if (! nu.partition().refines(c.partition()) && is_b_lattice_of_rings(quotient(c).algebra))
                result.push_back(c);
        return result;
    }

    auto lambda1_relation(const Semiring & s) -> Relation
    {
        int n = s.order();
        Relation r(n);
        for (Element a = 0 ; a < n ; ++a)
            for (Element b = 0 ; b < n ; ++b)
                r.set(a, b, a == s.add(s.circle(a), b) && b == s.add(s.circle(b), a));
        return r;
    }

    auto lambda2_relation(const Semiring & s) -> Relation
    {
        int n = s.order();
        Relation r(n);
        for (Element a = 0 ; a < n ; ++a)
            for (Element b = 0 ; b < n ; ++b)
                r.set(a, b, a == s.add(b, s.circle(a)) && b == s.add(a, s.circle(b)));
        return r;
    }

    auto lambda12(const Semiring & s) -> LambdaPair
    {
        if (! is_band_orthoring(s))
            throw PreconditionError("lambda1 and lambda2 need a band orthoring");
        auto l1 = lambda1_relation(s), l2 = lambda2_relation(s);
        auto c1 = checked_congruence(s, l1, "lambda1");
        auto c2 = checked_congruence(s, l2, "lambda2");
        auto nu = nu_plus_relation(s);
        if (l1.compose(l2) != nu)
            throw TheoremViolation("lambda1 . lambda2 = " + l1.compose(l2).to_string() + " differs from nu+ = " + nu.to_string());
        if (l2.compose(l1) != nu)
            throw TheoremViolation("lambda2 . lambda1 = " + l2.compose(l1).to_string() + " differs from nu+ = " + nu.to_string());
        return LambdaPair{ c1, c2 };
    }

    auto additive_green_congruence(const Semiring & s, char which) -> optional<Congruence>
    {
        auto g = green(s.add_table());
        const Partition * p = nullptr;
        switch (which) {
            case 'L': p = &g.L; break;
            case 'R': p = &g.R; break;
            case 'H': p = &g.H; break;
            case 'D': p = &g.D; break;
            case 'J': p = &g.J; break;
            default: throw Error(string("unknown Green's relation '") + which + "'");
        }
        if (! is_congruence(s, *p))
            return std::nullopt;
        return Congruence(s, *p);
    }
}
