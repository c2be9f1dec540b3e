#include "edd/cli/polyexpr.hpp"

#include <array>
#include <cctype>
#include <map>
#include <optional>

namespace edd::cli {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::invalid_argument(offset ? "at offset " + std::to_string(offset) + ": " + message : message),
      offset_(offset) {}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;  // 1-based
};

std::string describe(const Token& t) {
    if (t.kind == Tok::end) return "end of input";
    return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const std::size_t at = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::number, std::string(text.substr(i, j - i)), at});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            out.push_back({Tok::ident, std::string(text.substr(i, j - i)), at});
            i = j;
        } else {
            Tok kind;
            switch (c) {
                case '+': kind = Tok::plus; break;
                case '-': kind = Tok::minus; break;
                case '*': kind = Tok::star; break;
                case '/': kind = Tok::slash; break;
                case '^': kind = Tok::caret; break;
                case '(': kind = Tok::lparen; break;
                case ')': kind = Tok::rparen; break;
                default: throw ParseError(at, std::string("unexpected character '") + c + "'");
            }
            out.push_back({kind, std::string(1, c), at});
            ++i;
        }
    }
    out.push_back({Tok::end, "", text.size() + 1});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    PolyExpr parse() {
        PolyExpr e = expr();
        if (peek().kind != Tok::end) {
            if (peek().kind == Tok::rparen) throw ParseError(peek().offset, "unbalanced ')'");
            throw ParseError(peek().offset, "expected '+', '-', '*' or end of input, found " + describe(peek()));
        }
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }

    PolyExpr expr() {
        PolyExpr left = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const bool add = next().kind == Tok::plus;
            PolyExpr node;
            node.kind = add ? PolyExpr::Kind::add : PolyExpr::Kind::subtract;
            node.children.push_back(std::move(left));
            node.children.push_back(term());
            left = std::move(node);
        }
        return left;
    }

    PolyExpr term() {
        PolyExpr left = unary();
        while (peek().kind == Tok::star) {
            next();
            PolyExpr node;
            node.kind = PolyExpr::Kind::multiply;
            node.children.push_back(std::move(left));
            node.children.push_back(unary());
            left = std::move(node);
        }
        return left;
    }

    PolyExpr unary() {
        if (peek().kind == Tok::plus) {
            next();
            return unary();
        }
        if (peek().kind == Tok::minus) {
            next();
            PolyExpr node;
            node.kind = PolyExpr::Kind::negate;
            node.children.push_back(unary());
            return node;
        }
        return power();
    }

    PolyExpr power() {
        PolyExpr base = atom();
        if (peek().kind != Tok::caret) return base;
        next();
        const Token exp = next();
        if (exp.kind != Tok::number) throw ParseError(exp.offset, "expected an integer exponent, found " + describe(exp));
        if (exp.text.size() > 6 || std::stoul(exp.text) > kMaxExponent) {
            throw ParseError(exp.offset, "exponent exceeds " + std::to_string(kMaxExponent));
        }
        if (peek().kind == Tok::slash) throw ParseError(peek().offset, "exponents must be integers");
        PolyExpr node;
        node.kind = PolyExpr::Kind::power;
        node.exponent = static_cast<unsigned>(std::stoul(exp.text));
        node.children.push_back(std::move(base));
        return node;
    }

    PolyExpr atom() {
        const Token tok = next();
        PolyExpr node;
        switch (tok.kind) {
            case Tok::number: {
                Integer num = Integer::parse(tok.text);
                Integer den = 1;
                if (peek().kind == Tok::slash) {
                    next();
                    const Token d = next();
                    if (d.kind != Tok::number) throw ParseError(d.offset, "expected a denominator, found " + describe(d));
                    den = Integer::parse(d.text);
                    if (den.is_zero()) throw ParseError(d.offset, "zero denominator");
                }
                node.value = Rational(num, den);
                return node;
            }
            case Tok::ident:
                if (tok.text == "i") {
                    node.value = GaussianRational::i();
                    return node;
                }
                if (tok.text.size() == 1 && std::string_view("xyzst").find(tok.text[0]) != std::string_view::npos) {
                    node.kind = PolyExpr::Kind::variable;
                    node.variable = tok.text[0];
                    return node;
                }
                throw ParseError(tok.offset, "unknown identifier '" + tok.text + "'");
            case Tok::lparen: {
                PolyExpr inner = expr();
                const Token close = next();
                if (close.kind != Tok::rparen) {
                    throw ParseError(close.offset, "expected ')', found " + describe(close));
                }
                return inner;
            }
            case Tok::rparen: throw ParseError(tok.offset, "unbalanced ')'");
            default: throw ParseError(tok.offset, "expected a number, 'i', a variable or '(', found " + describe(tok));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

using Exponent5 = std::array<unsigned, 5>;  // x y z s t
using Sparse = std::map<Exponent5, GaussianRational>;

void add_into(Sparse& acc, const Exponent5& e, const GaussianRational& c) {
    auto [it, inserted] = acc.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    } else if (c.is_zero()) {
        acc.erase(it);
    }
}

Sparse multiply(const Sparse& a, const Sparse& b) {
    Sparse out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponent5 e;
            for (std::size_t k = 0; k < 5; ++k) e[k] = ea[k] + eb[k];
            add_into(out, e, ca * cb);
        }
    }
    return out;
}

Sparse evaluate(const PolyExpr& node) {
    using Kind = PolyExpr::Kind;
    switch (node.kind) {
        case Kind::literal: {
            Sparse out;
            add_into(out, {}, node.value);
            return out;
        }
        case Kind::variable: {
            Exponent5 e{};
            e[std::string_view("xyzst").find(node.variable)] = 1;
            return Sparse{{e, GaussianRational(1)}};
        }
        case Kind::add:
        case Kind::subtract: {
            Sparse out = evaluate(node.children[0]);
            const bool negate = node.kind == Kind::subtract;
            for (const auto& [e, c] : evaluate(node.children[1])) add_into(out, e, negate ? -c : c);
            return out;
        }
        case Kind::multiply: return multiply(evaluate(node.children[0]), evaluate(node.children[1]));
        case Kind::negate: {
            Sparse out = evaluate(node.children[0]);
            for (auto& [e, c] : out) c = -c;
            return out;
        }
        case Kind::power: {
            const Sparse base = evaluate(node.children[0]);
            Sparse out{{Exponent5{}, GaussianRational(1)}};
            for (unsigned k = 0; k < node.exponent; ++k) out = multiply(out, base);
            return out;
        }
    }
    return {};
}

// Common total degree of the terms; nullopt for the zero polynomial.
std::optional<unsigned> homogeneous_degree(const Sparse& p, std::size_t first, std::size_t count,
                                           const char* family) {
    std::optional<unsigned> degree;
    for (const auto& [e, c] : p) {
        unsigned total = 0;
        for (std::size_t k = 0; k < 5; ++k) {
            if (k >= first && k < first + count) {
                total += e[k];
            } else if (e[k] != 0) {
                throw ParseError(0, std::string("variable '") + "xyzst"[k] + "' is not allowed in a form in " + family);
            }
        }
        if (degree && *degree != total) throw ParseError(0, "the polynomial is not homogeneous");
        degree = total;
    }
    return degree;
}

}  // namespace

PolyExpr parse_poly(std::string_view text) { return Parser(lex(text)).parse(); }

TernaryForm to_ternary(const PolyExpr& expr) {
    const Sparse p = evaluate(expr);
    const auto degree = homogeneous_degree(p, 0, 3, "x, y, z");
    TernaryForm out(degree.value_or(0));
    for (const auto& [e, c] : p) out.add_term({e[0], e[1], e[2]}, c);
    return out;
}

BinaryForm to_binary(const PolyExpr& expr) {
    const Sparse p = evaluate(expr);
    const auto degree = homogeneous_degree(p, 3, 2, "s, t");
    BinaryForm out = BinaryForm::zero(degree.value_or(0));
    for (const auto& [e, c] : p) out = out + BinaryForm::monomial(c, e[3], e[4]);
    return out;
}

GaussianRational to_constant(const PolyExpr& expr) {
    const Sparse p = evaluate(expr);
    if (p.empty()) return GaussianRational();
    if (p.size() != 1 || p.begin()->first != Exponent5{}) throw ParseError(0, "expected a constant");
    return p.begin()->second;
}

}  // namespace edd::cli
