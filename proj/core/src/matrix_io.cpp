#include <charconv>
#include <sstream>

#include "butson/matrices.hpp"

namespace butson {

ParseError::ParseError(unsigned line, unsigned col, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                         ": " + what),
      line_(line),
      col_(col) {}

namespace {

struct Token {
    std::string_view text;
    unsigned line;
    unsigned col;
};

// Tokens of one line, with 1-based columns.
std::vector<Token> tokenize_line(std::string_view line, unsigned line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), line_no, static_cast<unsigned>(start + 1)});
    }
    return out;
}

std::uint64_t parse_uint(const Token& tok, const char* what) {
    std::uint64_t value = 0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(tok.line, tok.col,
                         std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
    return value;
}

}  // namespace

RootMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    {
        unsigned line_no = 1;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            std::string_view line =
                text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
            auto toks = tokenize_line(line, line_no);
            if (!toks.empty()) lines.push_back(std::move(toks));
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
            ++line_no;
        }
    }
    if (lines.empty()) throw ParseError(1, 1, "empty input");

    const auto& header = lines[0];
    const std::string_view magic = header[0].text;
    const bool circ = magic == "circ";
    if (!circ && magic != "bh")
        throw ParseError(header[0].line, header[0].col, "expected 'bh' or 'circ'");
    if (header.size() != 3)
        throw ParseError(header[0].line, header[0].col,
                         "header must be '" + std::string(magic) + " <m> <l>'");
    const std::uint64_t m64 = parse_uint(header[1], "dimension m");
    const std::uint64_t l64 = parse_uint(header[2], "root order l");
    if (m64 == 0) throw ParseError(header[1].line, header[1].col, "dimension m must be positive");
    if (l64 == 0) throw ParseError(header[2].line, header[2].col, "root order l must be positive");
    if (m64 > 4096 || l64 > (1u << 30))
        throw ParseError(header[1].line, header[1].col, "matrix size out of supported range");
    const auto m = static_cast<unsigned>(m64);
    const auto l = static_cast<unsigned>(l64);

    const std::size_t expect_rows = circ ? 1 : m;
    if (lines.size() - 1 < expect_rows) {
        const auto& last = lines.back().back();
        throw ParseError(last.line + 1, 1,
                         "expected " + std::to_string(expect_rows) + " row(s), got " +
                             std::to_string(lines.size() - 1));
    }
    if (lines.size() - 1 > expect_rows) {
        const auto& extra = lines[expect_rows + 1][0];
        throw ParseError(extra.line, extra.col, "unexpected extra line");
    }

    std::vector<unsigned> exps;
    exps.reserve(std::size_t(m) * (circ ? 1 : m));
    for (std::size_t r = 1; r <= expect_rows; ++r) {
        const auto& row = lines[r];
        if (row.size() != m) {
            const auto& anchor = row.size() > m ? row[m] : row.back();
            throw ParseError(anchor.line, row.size() > m ? anchor.col : anchor.col + 1,
                             "row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(m));
        }
        for (const auto& tok : row) {
            const std::uint64_t e = parse_uint(tok, "exponent");
            if (e >= l)
                throw ParseError(tok.line, tok.col,
                                 "exponent " + std::to_string(e) + " out of range [0, " +
                                     std::to_string(l) + ")");
            exps.push_back(static_cast<unsigned>(e));
        }
    }

    if (circ) return RootMatrix::circulant(l, exps);
    return RootMatrix(m, l, std::move(exps));
}

std::string format_matrix(const RootMatrix& M) {
    std::ostringstream os;
    os << "bh " << M.dim() << " " << M.root_order() << "\n";
    for (unsigned j = 0; j < M.dim(); ++j) {
        for (unsigned k = 0; k < M.dim(); ++k) {
            if (k > 0) os << ' ';
            os << M.exp_at(j, k);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace butson
