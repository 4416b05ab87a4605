#include <semiring/classify.hh>
#include <semiring/enumerate.hh>

#include <algorithm>
#include <numeric>
#include <set>

using std::optional;
using std::string;
using std::vector;

namespace semiring
{
    auto EnumSpec::describe() const -> string
    {
        vector<string> parts;
        if (idempotent_add)
            parts.emplace_back("idempotent-add");
        if (idempotent_mul)
            parts.emplace_back("idempotent-mul");
        if (fixed_add)
            parts.emplace_back("fixed-add-table");
        if (completely_regular)
            parts.emplace_back("completely-regular");
        if (orthoring)
            parts.emplace_back("orthoring");
        for (auto & id : identities)
            parts.push_back("identity(" + to_string(id) + ")");
        string result;
        for (auto & p : parts)
            result += (result.empty() ? "" : ",") + p;
        return result.empty() ? "none" : result;
    }

    namespace
    {
        /// Cell-by-cell backtracking over a table, in row-major order, with -1 for unassigned.
        /// The check after each assignment looks only at laws whose lookups are all assigned.
        class TableSearch
        {
            private:
                int _n;
                bool _idempotent;
                const OpTable * _add;
                vector<Element> _cells;

                auto cell(Element a, Element b) const -> Element { return _cells[a * _n + b]; }

                auto associative_so_far() const -> bool
                {
                    for (Element x = 0 ; x < _n ; ++x)
                        for (Element y = 0 ; y < _n ; ++y) {
                            Element xy = cell(x, y);
                            if (xy < 0)
                                continue;
                            for (Element z = 0 ; z < _n ; ++z) {
                                Element yz = cell(y, z);
                                if (yz < 0)
                                    continue;
                                Element lhs = cell(xy, z), rhs = cell(x, yz);
                                if (lhs >= 0 && rhs >= 0 && lhs != rhs)
                                    return false;
                            }
                        }
                    return true;
                }

                auto distributive_so_far() const -> bool
                {
                    auto & add = *_add;
                    for (Element x = 0 ; x < _n ; ++x)
                        for (Element y = 0 ; y < _n ; ++y)
                            for (Element z = 0 ; z < _n ; ++z) {
                                Element sum = add.at(y, z);
                                Element xs = cell(x, sum), xy = cell(x, y), xz = cell(x, z);
                                if (xs >= 0 && xy >= 0 && xz >= 0 && xs != add.at(xy, xz))
                                    return false;
                                Element sx = cell(sum, x), yx = cell(y, x), zx = cell(z, x);
                                if (sx >= 0 && yx >= 0 && zx >= 0 && sx != add.at(yx, zx))
                                    return false;
                            }
                    return true;
                }

                auto search(int position, const std::function<void (const OpTable &)> & found) -> void
                {
                    if (position == _n * _n) {
                        found(OpTable(_n, _cells));
                        return;
                    }
                    Element a = position / _n, b = position % _n;
                    Element low = 0, high = _n - 1;
                    if (_idempotent && a == b)
                        low = high = a;
                    for (Element v = low ; v <= high ; ++v) {
                        _cells[position] = v;
                        if (associative_so_far() && (! _add || distributive_so_far()))
                            search(position + 1, found);
                    }
                    _cells[position] = -1;
                }

            public:
                TableSearch(int n, bool idempotent, const OpTable * add) :
                    _n(n),
                    _idempotent(idempotent),
                    _add(add),
                    _cells(n * n, -1)
                {
                }

                auto run(const std::function<void (const OpTable &)> & found) -> void
                {
                    search(0, found);
                }
        };

        auto permuted(const OpTable & t, const vector<Element> & p) -> vector<Element>
        {
            int n = t.order();
            vector<Element> result(n * n);
            for (Element a = 0 ; a < n ; ++a)
                for (Element b = 0 ; b < n ; ++b)
                    result[p[a] * n + p[b]] = p[t.at(a, b)];
            return result;
        }

        auto all_permutations(int n) -> vector<vector<Element>>
        {
            vector<Element> p(n);
            std::iota(p.begin(), p.end(), 0);
            vector<vector<Element>> result;
            do
                result.push_back(p);
            while (std::next_permutation(p.begin(), p.end()));
            return result;
        }

        constexpr int max_canonical_order = 8;

        auto entries_of(const OpTable & t) -> vector<Element>
        {
            return vector<Element>(t.entries().begin(), t.entries().end());
        }

        /// Permutations fixing a canonical table.
        auto automorphisms(const OpTable & t, const vector<vector<Element>> & perms) -> vector<vector<Element>>
        {
            auto original = entries_of(t);
            vector<vector<Element>> result;
            for (auto & p : perms)
                if (permuted(t, p) == original)
                    result.push_back(p);
            return result;
        }

        auto first_row_value(const OpTable & t) -> long
        {
            long value = 0;
            for (Element b = 0 ; b < t.order() ; ++b)
                value = value * t.order() + t.at(0, b);
            return value;
        }

        auto passes_filters(const EnumSpec & spec, const Semiring & s) -> bool
        {
            if (spec.completely_regular && ! is_completely_regular(s))
                return false;
            if (spec.orthoring && ! is_orthoring(s))
                return false;
            for (auto & id : spec.identities) {
                if (id.uses_inverse() && ! s.has_pseudo_inverse())
                    return false;
                if (! satisfies(s, id))
                    return false;
            }
            return true;
        }
    }

    auto labeled_semigroups(int order, bool idempotent) -> vector<OpTable>
    {
        if (order < 1)
            throw PreconditionError("order must be at least 1");
        vector<OpTable> result;
        TableSearch(order, idempotent, nullptr).run([&] (const OpTable & t) { result.push_back(t); });
        return result;
    }

    auto canonical_table(const OpTable & t) -> OpTable
    {
        if (t.order() > max_canonical_order)
            throw CapExceeded("canonical labelling is capped at order " + std::to_string(max_canonical_order));
        auto best = entries_of(t);
        for (auto & p : all_permutations(t.order()))
            best = std::min(best, permuted(t, p));
        return OpTable(t.order(), best);
    }

    auto canonical_form(const Semiring & s) -> Semiring
    {
        int n = s.order();
        if (n > max_canonical_order)
            throw CapExceeded("canonical labelling is capped at order " + std::to_string(max_canonical_order));
        auto best_add = entries_of(s.add_table()), best_mul = entries_of(s.mul_table());
        for (auto & p : all_permutations(n)) {
            auto add = permuted(s.add_table(), p);
            if (add > best_add)
                continue;
            auto mul = permuted(s.mul_table(), p);
            if (add < best_add || mul < best_mul) {
                best_add = std::move(add);
                best_mul = std::move(mul);
            }
        }
        return Semiring::from_tables(OpTable(n, best_add), OpTable(n, best_mul));
    }

    auto canonical_less(const Semiring & a, const Semiring & b) -> bool
    {
        if (a.order() != b.order())
            return a.order() < b.order();
        if (a.add_table() != b.add_table())
            return std::lexicographical_compare(a.add_table().entries().begin(), a.add_table().entries().end(),
                    b.add_table().entries().begin(), b.add_table().entries().end());
        return std::lexicographical_compare(a.mul_table().entries().begin(), a.mul_table().entries().end(),
                b.mul_table().entries().begin(), b.mul_table().entries().end());
    }

    auto enumerate(const EnumSpec & spec, const std::function<void (const Semiring &)> & emit) -> EnumStats
    {
        int n = spec.order;
        if (n < 1)
            throw PreconditionError("order must be at least 1");
        bool additive_constraint = spec.idempotent_add || spec.fixed_add;
        int bound = additive_constraint ? max_constrained_order : max_unconstrained_order;
        if (n > bound)
            throw CapExceeded("enumeration of order " + std::to_string(n) + " needs order <= " + std::to_string(bound)
                    + (additive_constraint ? "" : " (or <= " + std::to_string(max_constrained_order) + " with an additive constraint)"));
        if (spec.shard_count < 1 || spec.shard_index < 0 || spec.shard_index >= spec.shard_count)
            throw PreconditionError("shard index must lie in [0, shard count)");
        if (spec.resume_after && spec.resume_after->order() != n)
            throw PreconditionError("resume point has a different order");

        // addition representatives, canonical and sorted; a canonical pair always has a canonical addition
        std::set<OpTable> representatives;
        if (spec.fixed_add) {
            if (spec.fixed_add->order() != n || ! spec.fixed_add->is_associative())
                throw PreconditionError("fixed addition table must be associative and of the requested order");
            if (spec.idempotent_add && ! spec.fixed_add->is_idempotent())
                return EnumStats{};
            representatives.insert(canonical_table(*spec.fixed_add));
        }
        else
            for (auto & t : labeled_semigroups(n, spec.idempotent_add))
                representatives.insert(canonical_table(t));

        auto perms = all_permutations(n);
        EnumStats stats;
        for (auto & add : representatives) {
            if (first_row_value(add) % spec.shard_count != spec.shard_index)
                continue;
            if (spec.resume_after && add < spec.resume_after->add_table())
                continue;
            ++stats.addition_representatives;

            auto symmetries = automorphisms(add, perms);
            std::set<vector<Element>> muls;
            TableSearch(n, spec.idempotent_mul, &add).run([&] (const OpTable & mul) {
                auto best = entries_of(mul);
                for (auto & p : symmetries)
                    best = std::min(best, permuted(mul, p));
                muls.insert(std::move(best));
            });

            for (auto & mul : muls) {
                auto s = Semiring::from_tables(add, OpTable(n, mul));
                if (spec.resume_after && ! canonical_less(*spec.resume_after, s))
                    continue;
                if (! passes_filters(spec, s))
                    continue;
                if (spec.cap && stats.emitted >= *spec.cap) {
                    stats.complete = false;
                    return stats;
                }
                emit(s);
                ++stats.emitted;
            }
        }
        return stats;
    }

    auto enumerate(const EnumSpec & spec) -> vector<Semiring>
    {
        vector<Semiring> result;
        enumerate(spec, [&] (const Semiring & s) { result.push_back(s); });
        return result;
    }
}
