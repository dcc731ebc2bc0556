#include "wsnash/game_io.hpp"

#include <cctype>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "wsnash/errors.hpp"

namespace wsnash {

namespace {

struct Token {
    std::string text;
    std::size_t line; // 1-based
    std::size_t col;  // 1-based
};

// Whitespace-separated tokens with positions; comment lines are dropped.
std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;

        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i < line.size() && line[i] != '#') {
            while (i < line.size()) {
                std::size_t start = i;
                while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                    ++i;
                tokens.push_back(Token{std::string(line.substr(start, i - start)), line_no,
                                       start + 1});
                while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                    ++i;
            }
        }
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return tokens;
}

class TokenReader {
public:
    explicit TokenReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& next(const std::string& what) {
        if (index_ >= tokens_.size()) {
            const Token* last = tokens_.empty() ? nullptr : &tokens_.back();
            throw ParseError("expected " + what + ", found end of input",
                             last ? last->line : 1, last ? last->col + last->text.size() : 1);
        }
        return tokens_[index_++];
    }

    bool done() const { return index_ >= tokens_.size(); }
    const Token& peek() const { return tokens_[index_]; }

private:
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

Rational read_rational(TokenReader& reader, const std::string& what) {
    const Token& token = reader.next(what);
    try {
        return parse_rational(token.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError("bad " + what + " '" + token.text + "': " + e.what(), token.line,
                         token.col);
    }
}

std::size_t read_dimension(TokenReader& reader) {
    const Token& token = reader.next("dimension");
    std::size_t n = 0;
    for (char ch : token.text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)) || n > 100000)
            throw ParseError("bad dimension '" + token.text + "'", token.line, token.col);
        n = n * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (n == 0)
        throw ParseError("dimension must be positive", token.line, token.col);
    return n;
}

RationalMatrix read_matrix(TokenReader& reader, std::size_t n, const std::string& what) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = read_rational(reader, what + " entry");
    return m;
}

void expect_done(const TokenReader& reader) {
    if (!reader.done()) {
        const Token& extra = reader.peek();
        throw ParseError("unexpected trailing content '" + extra.text + "'", extra.line,
                         extra.col);
    }
}

} // namespace

BimatrixGame parse_game(std::string_view text) {
    TokenReader reader(tokenize(text));
    const Token& kind = reader.next("header ('symmetric' or 'bimatrix')");
    bool symmetric;
    if (kind.text == "symmetric")
        symmetric = true;
    else if (kind.text == "bimatrix")
        symmetric = false;
    else
        throw ParseError("unknown header '" + kind.text + "'", kind.line, kind.col);

    std::size_t n = read_dimension(reader);
    RationalMatrix r = read_matrix(reader, n, "payoff");
    RationalMatrix c = symmetric ? r.transposed() : read_matrix(reader, n, "payoff");
    expect_done(reader);
    return BimatrixGame(std::move(r), std::move(c));
}

std::string render_game(const BimatrixGame& game) {
    const std::size_t n = game.size();
    bool symmetric = is_symmetric(game);
    std::ostringstream out;
    out << (symmetric ? "symmetric " : "bimatrix ") << n << '\n';
    auto emit = [&](const RationalMatrix& m) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out << ' ';
                out << to_string(m.at(i, j));
            }
            out << '\n';
        }
    };
    emit(game.row_payoffs());
    if (!symmetric) emit(game.col_payoffs());
    return out.str();
}

StrategyProfile parse_profile(std::string_view text, std::size_t n) {
    TokenReader reader(tokenize(text));
    auto read_strategy = [&](const std::string& who) {
        std::vector<Rational> weights;
        weights.reserve(n);
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!reader.done()) {
                line = reader.peek().line;
                col = reader.peek().col;
            }
            weights.push_back(read_rational(reader, who + " weight"));
        }
        try {
            return MixedStrategy(std::move(weights));
        } catch (const std::invalid_argument& e) {
            throw ParseError(who + " strategy: " + e.what(), line, col);
        }
    };
    MixedStrategy row = read_strategy("row");
    MixedStrategy col = read_strategy("column");
    expect_done(reader);
    return StrategyProfile{std::move(row), std::move(col)};
}

std::string render_profile(const StrategyProfile& profile) {
    std::ostringstream out;
    auto emit = [&](const MixedStrategy& s) {
        for (std::size_t i = 0; i < s.dimension(); ++i) {
            if (i) out << ' ';
            out << to_string(s.weight(i));
        }
        out << '\n';
    };
    emit(profile.row);
    emit(profile.col);
    return out.str();
}

namespace {

// Uniform draw from [0, m) by rejection; every residue is equally likely.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) {
    std::uint64_t lim = (std::numeric_limits<std::uint64_t>::max() % m + 1) % m; // 2^64 mod m
    for (;;) {
        std::uint64_t r = rng();
        if (r >= lim) return r % m;
    }
}

} // namespace

BimatrixGame generate_game(GameKind kind, std::size_t n, std::uint64_t seed, bool symmetric) {
    if (n == 0) throw std::invalid_argument("game dimension must be positive");
    std::mt19937_64 rng(seed);
    auto draw = [&]() -> Rational {
        if (kind == GameKind::WinLose) return Rational(static_cast<long>(bounded(rng, 2)));
        return make_rational(static_cast<long>(bounded(rng, 1001)), 1000);
    };
    RationalMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = draw();
    RationalMatrix c(n, n);
    if (symmetric) {
        c = r.transposed();
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) c.at(i, j) = draw();
    }
    return BimatrixGame(std::move(r), std::move(c));
}

} // namespace wsnash
