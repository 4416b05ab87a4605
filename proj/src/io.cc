#include <semiring/io.hh>

#include <fstream>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace semiring
{
    ParseError::ParseError(int line, const string & message) :
        Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        _line(line),
        _message(message)
    {
    }

    AxiomError::AxiomError(int line, const string & message, vector<Violation> violations) :
        ParseError(line, message),
        _violations(std::move(violations))
    {
    }

    namespace
    {
        struct Line
        {
            int number;
            string text;
        };

        auto split_lines(string_view text) -> vector<Line>
        {
            if (text.empty() || text.back() != '\n')
                throw ParseError(0, "semiring document must end with a newline");

            vector<Line> result;
            int number = 0;
            std::size_t start = 0;
            while (start < text.size()) {
                auto end = text.find('\n', start);
                ++number;
                string line(text.substr(start, end - start));
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                if (line.empty() || line.front() != '#')
                    result.push_back({ number, std::move(line) });
                start = end + 1;
            }
            return result;
        }

        auto parse_row(const Line & line, int n) -> vector<Element>
        {
            std::istringstream in(line.text);
            vector<Element> row;
            string token;
            while (in >> token) {
                std::size_t used = 0;
                int value = 0;
                try {
                    value = std::stoi(token, &used);
                }
                catch (const std::exception &) {
                    throw ParseError(line.number, "expected an integer, got '" + token + "'");
                }
                if (used != token.size())
                    throw ParseError(line.number, "expected an integer, got '" + token + "'");
                if (value < 0 || value >= n)
                    throw ParseError(line.number, "entry " + token + " outside 0.." + std::to_string(n - 1));
                row.push_back(value);
            }
            if (int(row.size()) != n)
                throw ParseError(line.number, "expected " + std::to_string(n) + " entries, got " + std::to_string(row.size()));
            return row;
        }

        auto expect_header(const vector<Line> & lines, std::size_t at, const string & header, int last_line) -> void
        {
            if (at >= lines.size())
                throw ParseError(last_line, "expected '" + header + "', got end of document");
            if (lines[at].text != header)
                throw ParseError(lines[at].number, "expected '" + header + "', got '" + lines[at].text + "'");
        }

        auto parse_table(const vector<Line> & lines, std::size_t & at, int n, int last_line) -> OpTable
        {
            vector<Element> entries;
            for (int i = 0 ; i < n ; ++i, ++at) {
                if (at >= lines.size())
                    throw ParseError(last_line, "table ended after " + std::to_string(i) + " rows");
                auto row = parse_row(lines[at], n);
                entries.insert(entries.end(), row.begin(), row.end());
            }
            return OpTable(n, std::move(entries));
        }
    }

    auto parse_semiring(string_view text) -> Semiring
    {
        auto lines = split_lines(text);
        int last_line = lines.empty() ? 1 : lines.back().number;

        if (lines.empty())
            throw ParseError(1, "empty document");

        const string prefix = "order: ";
        if (lines[0].text.rfind(prefix, 0) != 0)
            throw ParseError(lines[0].number, "expected 'order: <n>'");
        int n = 0;
        try {
            std::size_t used = 0;
            auto digits = lines[0].text.substr(prefix.size());
            n = std::stoi(digits, &used);
            if (used != digits.size())
                throw ParseError(lines[0].number, "malformed order");
        }
        catch (const ParseError &) {
            throw;
        }
        catch (const std::exception &) {
            throw ParseError(lines[0].number, "malformed order");
        }
        if (n < 1)
            throw ParseError(lines[0].number, "order must be at least 1");
        int order_line = lines[0].number;

        std::size_t at = 1;
        expect_header(lines, at++, "add:", last_line);
        auto add = parse_table(lines, at, n, last_line);
        expect_header(lines, at++, "mul:", last_line);
        auto mul = parse_table(lines, at, n, last_line);

        std::optional<vector<Element>> inverse;
        if (at < lines.size()) {
            expect_header(lines, at++, "inv:", last_line);
            if (at >= lines.size())
                throw ParseError(last_line, "inv: needs one row");
            inverse = parse_row(lines[at++], n);
        }
        if (at < lines.size())
            throw ParseError(lines[at].number, "unexpected trailing content '" + lines[at].text + "'");

        auto result = inverse ? Semiring::validate(add, mul, *inverse) : Semiring::validate(add, mul);
        if (! result.ok()) {
            string message = "tables violate the semiring axioms:";
            for (std::size_t i = 0 ; i < result.violations.size() && i < 5 ; ++i)
                message += " " + result.violations[i].to_string();
            throw AxiomError(order_line, message, result.violations);
        }
        return *result.semiring;
    }

    auto read_semiring_file(const std::filesystem::path & path) -> Semiring
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error("cannot open " + path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        try {
            return parse_semiring(buffer.str());
        }
        catch (const AxiomError & e) {
            throw AxiomError(e.line(), path.string() + ": " + e.message(), e.violations());
        }
        catch (const ParseError & e) {
            throw ParseError(e.line(), path.string() + ": " + e.message());
        }
    }

    namespace
    {
        auto write_rows(std::ostream & out, const OpTable & t) -> void
        {
            for (Element i = 0 ; i < t.order() ; ++i) {
                for (Element j = 0 ; j < t.order() ; ++j)
                    out << (j ? " " : "") << t.at(i, j);
                out << '\n';
            }
        }
    }

    auto format_semiring(const Semiring & s, bool include_inverse) -> string
    {
        std::ostringstream out;
        out << "order: " << s.order() << '\n';
        out << "add:\n";
        write_rows(out, s.add_table());
        out << "mul:\n";
        write_rows(out, s.mul_table());
        if (include_inverse && s.has_pseudo_inverse()) {
            out << "inv:\n";
            auto & inv = *s.pseudo_inverse();
            for (std::size_t i = 0 ; i < inv.size() ; ++i)
                out << (i ? " " : "") << inv[i];
            out << '\n';
        }
        return out.str();
    }

    auto write_semiring_file(const std::filesystem::path & path, const Semiring & s, bool include_inverse) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw Error("cannot write " + path.string());
        out << format_semiring(s, include_inverse);
    }
}
