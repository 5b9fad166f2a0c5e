#include <prodmake/expr.hpp>

#include <cctype>
#include <optional>

#include <prodmake/error.hpp>

namespace prodmake
{

namespace
{

enum class Tok { number, q, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text)
    {
        lex();
    }

    ExprNode parse()
    {
        ExprNode root = parse_expr();
        if (peek().kind != Tok::end) {
            fail("expected '+', '-', '*', '/' or end of input");
        }
        return root;
    }

private:
    void lex()
    {
        std::size_t i = 0;
        while (i < text_.size()) {
            const char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
                    ++j;
                }
                tokens_.push_back({Tok::number, i, std::string(text_.substr(i, j - i))});
                i = j;
                continue;
            }
            Tok kind{};
            switch (c) {
            case 'q':
                kind = Tok::q;
                break;
            case '+':
                kind = Tok::plus;
                break;
            case '-':
                kind = Tok::minus;
                break;
            case '*':
                kind = Tok::star;
                break;
            case '/':
                kind = Tok::slash;
                break;
            case '^':
                kind = Tok::caret;
                break;
            case '(':
                kind = Tok::lparen;
                break;
            case ')':
                kind = Tok::rparen;
                break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
            }
            tokens_.push_back({kind, i, std::string(1, c)});
            ++i;
        }
        tokens_.push_back({Tok::end, text_.size(), ""});
    }

    const Token &peek() const
    {
        return tokens_[cur_];
    }
    const Token &take()
    {
        return tokens_[cur_++];
    }

    [[noreturn]] void fail(const std::string &expected) const
    {
        const Token &t = peek();
        // Keep the reported offset inside the text, also at end of input.
        std::size_t pos = t.pos;
        std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        if (!text_.empty() && pos >= text_.size()) {
            pos = text_.size() - 1;
        }
        throw ParseError(expected + ", found " + found, pos);
    }

    static ExprNode make(ExprNode::Kind kind, std::vector<ExprNode> children, std::size_t begin, std::size_t end)
    {
        ExprNode n;
        n.kind = kind;
        n.children = std::move(children);
        n.begin = begin;
        n.end = end;
        return n;
    }

    ExprNode parse_expr()
    {
        ExprNode lhs = parse_term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const auto kind = take().kind == Tok::plus ? ExprNode::Kind::add : ExprNode::Kind::subtract;
            ExprNode rhs = parse_term();
            const auto b = lhs.begin;
            const auto e = rhs.end;
            lhs = make(kind, {std::move(lhs), std::move(rhs)}, b, e);
        }
        return lhs;
    }

    ExprNode parse_term()
    {
        ExprNode lhs = parse_factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const auto kind = take().kind == Tok::star ? ExprNode::Kind::multiply : ExprNode::Kind::divide;
            ExprNode rhs = parse_factor();
            const auto b = lhs.begin;
            const auto e = rhs.end;
            lhs = make(kind, {std::move(lhs), std::move(rhs)}, b, e);
        }
        return lhs;
    }

    ExprNode parse_factor()
    {
        ExprNode base = parse_base();
        if (peek().kind != Tok::caret) {
            return base;
        }
        take();
        bool negative = false;
        if (peek().kind == Tok::minus) {
            take();
            negative = true;
        }
        if (peek().kind != Tok::number) {
            fail("expected an unsigned integer exponent");
        }
        const Token &num = take();
        const BigInt mag(num.text, 10);
        if (mag > BigInt("9223372036854775807")) {
            throw ParseError("exponent too large", num.pos);
        }
        const auto b = base.begin;
        ExprNode n = make(ExprNode::Kind::power, {std::move(base)}, b, num.pos + num.text.size());
        n.exponent = static_cast<std::int64_t>(mag.get_si());
        if (negative) {
            n.exponent = -n.exponent;
        }
        return n;
    }

    ExprNode parse_base()
    {
        const Token &t = peek();
        switch (t.kind) {
        case Tok::number: {
            take();
            ExprNode n = make(ExprNode::Kind::integer, {}, t.pos, t.pos + t.text.size());
            n.value = BigInt(t.text, 10);
            return n;
        }
        case Tok::q:
            take();
            return make(ExprNode::Kind::variable, {}, t.pos, t.pos + 1);
        case Tok::lparen: {
            const auto open = take().pos;
            ExprNode inner = parse_expr();
            if (peek().kind != Tok::rparen) {
                fail("expected ')'");
            }
            const auto close = take().pos;
            // Parentheses widen the span but add no node.
            inner.begin = open;
            inner.end = close + 1;
            return inner;
        }
        case Tok::minus: {
            const auto start = take().pos;
            ExprNode operand = parse_base();
            const auto e = operand.end;
            return make(ExprNode::Kind::negate, {std::move(operand)}, start, e);
        }
        default:
            fail("expected an integer, 'q', '(' or '-'");
        }
    }

    std::string_view text_;
    std::vector<Token> tokens_;
    std::size_t cur_ = 0;
};

bool is_atom(const ExprNode &n)
{
    return n.kind == ExprNode::Kind::integer || n.kind == ExprNode::Kind::variable;
}

void print_into(const ExprNode &n, std::string &out)
{
    using K = ExprNode::Kind;
    switch (n.kind) {
    case K::integer:
        out += n.value.get_str();
        return;
    case K::variable:
        out += 'q';
        return;
    case K::negate: {
        const auto &c = n.children[0];
        out += '-';
        if (is_atom(c) || c.kind == K::negate) {
            print_into(c, out);
        } else {
            out += '(';
            print_into(c, out);
            out += ')';
        }
        return;
    }
    case K::power: {
        const auto &c = n.children[0];
        if (is_atom(c)) {
            print_into(c, out);
        } else {
            out += '(';
            print_into(c, out);
            out += ')';
        }
        out += '^';
        out += std::to_string(n.exponent);
        return;
    }
    case K::add:
    case K::subtract:
    case K::multiply:
    case K::divide: {
        static constexpr const char *ops[] = {" + ", " - ", " * ", " / "};
        const auto op = ops[static_cast<int>(n.kind) - static_cast<int>(K::add)];
        out += '(';
        print_into(n.children[0], out);
        out += op;
        print_into(n.children[1], out);
        out += ')';
        return;
    }
    }
}

// Exact degree bound for division-free subtrees with nonnegative powers.
std::optional<std::size_t> degree_bound(const ExprNode &n)
{
    using K = ExprNode::Kind;
    switch (n.kind) {
    case K::integer:
        return 0;
    case K::variable:
        return 1;
    case K::negate:
        return degree_bound(n.children[0]);
    case K::add:
    case K::subtract:
    case K::multiply: {
        auto l = degree_bound(n.children[0]);
        auto r = degree_bound(n.children[1]);
        if (!l || !r) {
            return std::nullopt;
        }
        return n.kind == K::multiply ? *l + *r : std::max(*l, *r);
    }
    case K::divide:
        return std::nullopt;
    case K::power: {
        auto b = degree_bound(n.children[0]);
        if (!b || n.exponent < 0) {
            return std::nullopt;
        }
        const auto e = static_cast<std::uint64_t>(n.exponent);
        if (*b != 0 && e > (std::uint64_t{1} << 20) / *b) {
            return std::nullopt;
        }
        return *b * e;
    }
    }
    return std::nullopt;
}

TruncatedSeries expand_node(const ExprNode &n, std::size_t order);

// Reciprocal of the expansion of `den`, with diagnostics pointing at `den`.
TruncatedSeries invert(const ExprNode &den, const TruncatedSeries &s)
{
    if (!s[0].is_zero()) {
        return reciprocal_convolution(s);
    }
    // Tell an identically zero polynomial apart from a mere zero constant term.
    if (auto bound = degree_bound(den); bound && expand_node(den, std::max(*bound, s.order())).is_zero()) {
        throw EvaluationError("division by the zero polynomial", den.begin, den.end);
    }
    throw EvaluationError("denominator has zero constant term", den.begin, den.end);
}

TruncatedSeries expand_node(const ExprNode &n, std::size_t order)
{
    using K = ExprNode::Kind;
    switch (n.kind) {
    case K::integer: {
        TruncatedSeries s(order);
        s[0] = Rational(n.value);
        return s;
    }
    case K::variable: {
        TruncatedSeries s(order);
        if (order >= 1) {
            s[1] = 1;
        }
        return s;
    }
    case K::negate:
        return -expand_node(n.children[0], order);
    case K::add:
        return expand_node(n.children[0], order) + expand_node(n.children[1], order);
    case K::subtract:
        return expand_node(n.children[0], order) - expand_node(n.children[1], order);
    case K::multiply:
        return mul(expand_node(n.children[0], order), expand_node(n.children[1], order));
    case K::divide: {
        auto num = expand_node(n.children[0], order);
        auto den = expand_node(n.children[1], order);
        return mul(num, invert(n.children[1], den));
    }
    case K::power: {
        auto base = expand_node(n.children[0], order);
        if (n.exponent >= 0) {
            return power(base, static_cast<std::uint64_t>(n.exponent));
        }
        return power(invert(n.children[0], base), static_cast<std::uint64_t>(-n.exponent));
    }
    }
    throw InvalidArgument("corrupt expression node");
}

} // namespace

bool same_tree(const ExprNode &a, const ExprNode &b)
{
    if (a.kind != b.kind || a.children.size() != b.children.size()) {
        return false;
    }
    if (a.kind == ExprNode::Kind::integer && a.value != b.value) {
        return false;
    }
    if (a.kind == ExprNode::Kind::power && a.exponent != b.exponent) {
        return false;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!same_tree(a.children[i], b.children[i])) {
            return false;
        }
    }
    return true;
}

ExprNode parse_expr(std::string_view text)
{
    return Parser(text).parse();
}

std::string print_expr(const ExprNode &node)
{
    std::string out;
    print_into(node, out);
    return out;
}

TruncatedSeries expand_expr(const ExprNode &node, std::size_t order)
{
    return expand_node(node, order);
}

} // namespace prodmake
