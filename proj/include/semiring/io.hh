#ifndef SEMIRING_GUARD_IO_HH
#define SEMIRING_GUARD_IO_HH 1

#include <semiring/core.hh>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace semiring
{
    class ParseError : public Error
    {
        private:
            int _line;
            std::string _message;

        public:
            ParseError(int line, const std::string & message);

            /// The message without the line prefix.
            [[nodiscard]] auto message() const -> const std::string & { return _message; }

            /// 1-based; 0 when the problem is not tied to a line (e.g. missing trailing newline).
            [[nodiscard]] auto line() const -> int { return _line; }
    };

    /// Well-formed tables that fail the semiring axioms.
    class AxiomError : public ParseError
    {
        private:
            std::vector<Violation> _violations;

        public:
            AxiomError(int line, const std::string & message, std::vector<Violation> violations);

            [[nodiscard]] auto violations() const -> const std::vector<Violation> & { return _violations; }
    };

    /**
     * Reads the text format
     *
     *     order: <n>
     *     add:
     *     <n rows of n integers>
     *     mul:
     *     <n rows of n integers>
     *     [inv:
     *     <one row of n integers>]
     *
     * Lines starting with '#' are ignored. The document must end with a newline. Axiom failures
     * throw AxiomError, pointing at the `order:` line.
     */
    auto parse_semiring(std::string_view text) -> Semiring;

    auto read_semiring_file(const std::filesystem::path & path) -> Semiring;

    /// Deterministic serialisation in exactly the layout parse_semiring reads. The inv: row is
    /// written only when asked for and present.
    auto format_semiring(const Semiring & s, bool include_inverse = false) -> std::string;

    auto write_semiring_file(const std::filesystem::path & path, const Semiring & s, bool include_inverse = false) -> void;
}

#endif
