#include "naive_enumeration.hh"

#include <algorithm>
#include <numeric>

using std::set;
using std::vector;

namespace
{
    auto is_associative(int n, const vector<int> & t) -> bool
    {
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b)
                for (int c = 0 ; c < n ; ++c)
                    if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]])
                        return false;
        return true;
    }

    auto distributes(int n, const vector<int> & add, const vector<int> & mul) -> bool
    {
        auto p = [&] (int a, int b) { return add[a * n + b]; };
        auto m = [&] (int a, int b) { return mul[a * n + b]; };
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b)
                for (int c = 0 ; c < n ; ++c)
                    if (m(a, p(b, c)) != p(m(a, b), m(a, c)) || m(p(a, b), c) != p(m(a, c), m(b, c)))
                        return false;
        return true;
    }
}

auto naive::all_semigroups(int n, bool idempotent) -> vector<vector<int>>
{
    vector<vector<int>> result;
    vector<int> t(n * n, 0);
    // odometer over every table, last cell fastest, so the output is lexicographic
    while (true) {
        bool ok = true;
        if (idempotent)
            for (int a = 0 ; a < n ; ++a)
                ok = ok && t[a * n + a] == a;
        if (ok && is_associative(n, t))
            result.push_back(t);

        int cell = n * n - 1;
        while (cell >= 0 && t[cell] == n - 1)
            t[cell--] = 0;
        if (cell < 0)
            break;
        ++t[cell];
    }
    return result;
}

auto naive::canonical(int n, const TablePair & pair) -> TablePair
{
    vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    TablePair best;
    TablePair image(pair.size());
    do {
        for (int half = 0 ; half < 2 ; ++half)
            for (int a = 0 ; a < n ; ++a)
                for (int b = 0 ; b < n ; ++b)
                    image[half * n * n + perm[a] * n + perm[b]] = perm[pair[half * n * n + a * n + b]];
        if (best.empty() || image < best)
            best = image;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

auto naive::semirings_from(int n, const vector<vector<int>> & additions,
        const vector<vector<int>> & multiplications) -> set<TablePair>
{
    set<TablePair> result;
    for (auto & add : additions)
        for (auto & mul : multiplications)
            if (distributes(n, add, mul)) {
                TablePair pair = add;
                pair.insert(pair.end(), mul.begin(), mul.end());
                result.insert(canonical(n, pair));
            }
    return result;
}

auto naive::all_semirings(int n, bool idempotent_add, bool idempotent_mul) -> set<TablePair>
{
    return semirings_from(n, all_semigroups(n, idempotent_add), all_semigroups(n, idempotent_mul));
}
