#include "core/sio.hpp"

#include "core/errors.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <sstream>
#include <vector>

namespace ascert {

namespace {

struct Line {
    int number = 0;  // 1-based
    std::string_view text;
};

std::vector<Line> data_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        ++number;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#')
            out.push_back({number, line});
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

std::vector<long long> parse_ints(const Line& line) {
    std::vector<long long> out;
    std::size_t pos = 0;
    const std::string_view s = line.text;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
        if (pos >= s.size()) break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
        if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t' &&
                                  *ptr != '\r'))
            throw ParseError("line " + std::to_string(line.number) + ", column " +
                             std::to_string(pos + 1) + ": not an integer");
        out.push_back(value);
        pos = static_cast<std::size_t>(ptr - s.data());
    }
    return out;
}

}  // namespace

RelationMatrix parse_scheme(std::string_view text) {
    auto lines = data_lines(text);
    if (lines.empty()) throw ParseError("empty input: expected header line \"n d\"");

    auto header = parse_ints(lines[0]);
    if (header.size() != 2)
        throw ParseError("line " + std::to_string(lines[0].number) +
                         ": header must be exactly \"n d\", got " +
                         std::to_string(header.size()) + " fields");
    long long n = header[0];
    long long d = header[1];
    if (n < 1 || n > 100000)
        throw ParseError("line " + std::to_string(lines[0].number) + ": point count " +
                         std::to_string(n) + " out of range");
    if (d < 0 || d >= n * n)
        throw ParseError("line " + std::to_string(lines[0].number) + ": class " +
                         std::to_string(d) + " out of range");

    if (lines.size() != static_cast<std::size_t>(n) + 1)
        throw ParseError("expected " + std::to_string(n) + " matrix rows, got " +
                         std::to_string(lines.size() - 1));

    RelationMatrix rm;
    rm.n = static_cast<int>(n);
    rm.d = static_cast<int>(d);
    rm.cells.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (long long r = 0; r < n; ++r) {
        const Line& line = lines[static_cast<std::size_t>(r) + 1];
        auto row = parse_ints(line);
        if (row.size() != static_cast<std::size_t>(n))
            throw ParseError("line " + std::to_string(line.number) + ": ragged row, expected " +
                             std::to_string(n) + " entries, got " + std::to_string(row.size()));
        for (long long c = 0; c < n; ++c) {
            long long v = row[static_cast<std::size_t>(c)];
            if (v < 0 || v > d)
                throw ParseError("line " + std::to_string(line.number) + ", entry " +
                                 std::to_string(c + 1) + ": relation index " + std::to_string(v) +
                                 " out of range 0.." + std::to_string(d));
            if (r == c && v != 0)
                throw ParseError("line " + std::to_string(line.number) + ", entry " +
                                 std::to_string(c + 1) + ": diagonal cell must be 0");
            if (r != c && v == 0)
                throw ParseError("line " + std::to_string(line.number) + ", entry " +
                                 std::to_string(c + 1) + ": identity relation off the diagonal");
            rm.cell(static_cast<int>(r), static_cast<int>(c)) = static_cast<int>(v);
        }
    }
    rm.validate();
    return rm;
}

std::string serialize_scheme(const Scheme& s) {
    std::ostringstream out;
    out << s.n() << ' ' << s.num_classes() << '\n';
    for (int r = 0; r < s.n(); ++r) {
        for (int c = 0; c < s.n(); ++c) {
            if (c) out << ' ';
            out << s.relation().cell(r, c);
        }
        out << '\n';
    }
    return out.str();
}

std::string serialize_hadamard(const SkewHadamardMatrix& h) {
    std::ostringstream out;
    for (int r = 0; r < h.order; ++r) {
        for (int c = 0; c < h.order; ++c) {
            if (c) out << ' ';
            out << (h.at(r, c) > 0 ? '+' : '-');
        }
        out << '\n';
    }
    return out.str();
}

namespace {

nlohmann::json scalar_json(const Quadratic& q, std::int64_t disc) {
    return nlohmann::json{{"a_num", to_int64(q.a().num())},
                          {"a_den", to_int64(q.a().den())},
                          {"b_num", to_int64(q.b().num())},
                          {"b_den", to_int64(q.b().den())},
                          {"disc", disc}};
}

nlohmann::json matrix_json(const QuadMatrix& m, std::int64_t disc) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m.at(r, c), disc));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string serialize_eigen_report(const EigenData& e) {
    nlohmann::json j{{"n", e.n},
                     {"class", e.P.rows() - 1},
                     {"disc", e.disc},
                     {"valencies", e.valencies},
                     {"multiplicities", e.multiplicities},
                     {"P", matrix_json(e.P, e.disc)},
                     {"Q", matrix_json(e.Q, e.disc)}};
    return j.dump(2) + "\n";
}

}  // namespace ascert
