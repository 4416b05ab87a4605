#ifndef SEMIRING_GUARD_TESTS_SUPPORT_NAIVE_ENUMERATION_HH
#define SEMIRING_GUARD_TESTS_SUPPORT_NAIVE_ENUMERATION_HH 1

#include <set>
#include <vector>

namespace naive
{
    /// add entries followed by mul entries, row-major.
    using TablePair = std::vector<int>;

    /// Every associative table on {0..n-1} from a plain scan of all n^(n*n) tables. Only sensible for
    /// n <= 3.
    auto all_semigroups(int n, bool idempotent) -> std::vector<std::vector<int>>;

    /// The least relabelling of the pair, over all n! permutations, comparing add entries first.
    auto canonical(int n, const TablePair & pair) -> TablePair;

    /// Filters every pair of the given semigroups for both distributive laws and reduces the
    /// survivors to canonical forms. Shares no code with the library.
    auto semirings_from(int n, const std::vector<std::vector<int>> & semigroups,
            const std::vector<std::vector<int>> & multiplications) -> std::set<TablePair>;

    /// Generate-and-filter over all table pairs. Only sensible for n <= 3.
    auto all_semirings(int n, bool idempotent_add, bool idempotent_mul) -> std::set<TablePair>;
}

#endif
