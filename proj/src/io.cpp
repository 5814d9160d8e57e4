#include "hposet/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "hposet/error.hpp"

namespace hposet {

namespace {

struct Token {
    std::string text;
    std::size_t line;
};

std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<Token> tokens;
        std::istringstream in{std::string(line)};
        for (std::string word; in >> word;) tokens.push_back({word, line_no});
        if (!tokens.empty()) lines.push_back(std::move(tokens));
        pos = end + 1;
    }
    return lines;
}

unsigned long long to_number(const Token& t) {
    unsigned long long v = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw ParseError(t.line, "expected a non-negative integer, got '" + t.text + "'");
    return v;
}

}  // namespace

Poset parse_poset(std::string_view text) {
    const auto lines = tokenize_lines(text);
    if (lines.empty()) throw ParseError(1, "empty poset description; expected 'n <size>'");
    const auto& head = lines.front();
    if (head.size() != 2 || head[0].text != "n") throw ParseError(head[0].line, "expected 'n <size>'");
    const auto n = to_number(head[1]);
    if (n > kMaxElements) throw ParseError(head[1].line, "posets are limited to 64 elements");

    std::vector<std::pair<std::size_t, std::size_t>> rels;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.size() != 3 || l[0].text != "rel") throw ParseError(l[0].line, "expected 'rel <a> <b>'");
        const auto a = to_number(l[1]);
        const auto b = to_number(l[2]);
        if (a < 1 || a > n || b < 1 || b > n) {
            throw ParseError(l[0].line, "label out of range 1.." + std::to_string(n));
        }
        rels.emplace_back(a - 1, b - 1);
    }
    try {
        return Poset::from_relations(n, rels);
    } catch (const NotPartialOrderError& e) {
        // point at the relation that closes the cycle
        for (std::size_t i = 1; i <= rels.size(); ++i) {
            try {
                Poset::from_relations(n, {rels.begin(), rels.begin() + static_cast<std::ptrdiff_t>(i)});
            } catch (const NotPartialOrderError&) {
                throw ParseError(lines[i][0].line, e.what());
            }
        }
        throw;
    }
}

std::string serialize_poset(const Poset& p) {
    std::string out = "n " + std::to_string(p.size()) + "\n";
    for (auto [a, b] : p.cover_relations()) out += "rel " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

LinearCode parse_code(std::string_view text) {
    const auto lines = tokenize_lines(text);
    if (lines.empty()) throw ParseError(1, "empty code description; expected 'q <prime> n <length> k <rows>'");
    const auto& head = lines.front();
    if (head.size() != 6 || head[0].text != "q" || head[2].text != "n" || head[4].text != "k") {
        throw ParseError(head[0].line, "expected 'q <prime> n <length> k <rows>'");
    }
    const auto q = to_number(head[1]);
    if (q > kMaxFieldOrder || !is_prime(static_cast<unsigned>(q))) {
        throw ParseError(head[1].line, "q = " + head[1].text + " is not a prime of at most 251");
    }
    const auto n = to_number(head[3]);
    const auto k = to_number(head[5]);
    if (n > kMaxElements) throw ParseError(head[3].line, "codes are limited to length 64");
    if (k > n) throw ParseError(head[5].line, "more rows than the length");
    const PrimeField field(static_cast<unsigned>(q));

    std::vector<Token> body;
    for (std::size_t i = 1; i < lines.size(); ++i) body.insert(body.end(), lines[i].begin(), lines[i].end());
    if (body.size() != k * n) {
        const std::size_t at = body.empty() ? head[0].line : body.back().line;
        throw ParseError(at, "expected " + std::to_string(k * n) + " residues, found " + std::to_string(body.size()));
    }
    std::vector<FqVector> rows;
    for (std::size_t r = 0; r < k; ++r) {
        FqVector v(field, n);
        for (std::size_t j = 0; j < n; ++j) {
            const Token& t = body[r * n + j];
            const auto x = to_number(t);
            if (x >= q) throw ParseError(t.line, "entry " + t.text + " is not below q = " + std::to_string(q));
            v.set(j, static_cast<Residue>(x));
        }
        rows.push_back(std::move(v));
    }
    return LinearCode(field, n, rows);
}

std::string serialize_code(const LinearCode& c) {
    std::string out = "q " + std::to_string(c.field().order()) + " n " + std::to_string(c.length()) + " k " +
                      std::to_string(c.dimension()) + "\n";
    for (std::size_t r = 0; r < c.dimension(); ++r) {
        for (std::size_t j = 0; j < c.length(); ++j) {
            if (j) out += ' ';
            out += std::to_string(c.generator().at(r, j));
        }
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace hposet
