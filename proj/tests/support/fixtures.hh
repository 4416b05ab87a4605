#ifndef SEMIRING_GUARD_TESTS_SUPPORT_FIXTURES_HH
#define SEMIRING_GUARD_TESTS_SUPPORT_FIXTURES_HH 1

#include <semiring/core.hh>
#include <semiring/io.hh>

#include <filesystem>
#include <string>
#include <vector>

namespace testing
{
    inline auto fixture_path(const std::string & name) -> std::filesystem::path
    {
        return std::filesystem::path{ SEMIRING_FIXTURE_DIR } / (name + ".sr");
    }

    inline auto data_path(const std::string & name) -> std::filesystem::path
    {
        return std::filesystem::path{ SEMIRING_TEST_DATA_DIR } / name;
    }

    inline auto golden_path(const std::string & name) -> std::filesystem::path
    {
        return std::filesystem::path{ SEMIRING_GOLDEN_DIR } / name;
    }

    inline auto fixture(const std::string & name) -> semiring::Semiring
    {
        return semiring::read_semiring_file(fixture_path(name));
    }

    /// The orthorings every decomposition check is run against.
    inline auto curated_names() -> std::vector<std::string>
    {
        return { "z2", "z3", "z4", "b2", "lz2", "rz2", "b2xz2", "lz2xz2", "rz2xz3", "lz2xrz2xz2" };
    }

    inline auto all_fixture_names() -> std::vector<std::string>
    {
        auto names = curated_names();
        names.insert(names.end(), { "b2xlz2", "null2", "z4zero" });
        return names;
    }

    /// Tables from rows, for building small examples inline.
    inline auto table(int n, std::vector<semiring::Element> entries) -> semiring::OpTable
    {
        return semiring::OpTable{ n, std::move(entries) };
    }
}

#endif
