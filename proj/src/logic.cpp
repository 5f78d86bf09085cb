#include "rado/logic.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <cmath>
#include <future>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_map>

namespace rado {

// ---------------------------------------------------------------------------
// AST plumbing

FormulaPtr f_adj(std::string x, std::string y) {
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::adj;
    f->var1 = std::move(x);
    f->var2 = std::move(y);
    return f;
}

FormulaPtr f_eq(std::string x, std::string y) {
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::eq;
    f->var1 = std::move(x);
    f->var2 = std::move(y);
    return f;
}

FormulaPtr f_edge(std::vector<std::string> args) {
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::edge;
    f->var1 = "E";
    f->args = std::move(args);
    return f;
}

FormulaPtr f_not(FormulaPtr g) {
    auto f = std::make_shared<Formula>();
    f->kind = FormulaKind::not_;
    f->left = std::move(g);
    return f;
}

namespace {

FormulaPtr binary(FormulaKind k, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->left = std::move(a);
    f->right = std::move(b);
    return f;
}

FormulaPtr quantifier(FormulaKind k, std::string x, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->var1 = std::move(x);
    f->left = std::move(body);
    return f;
}

} // namespace

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::and_, std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::or_, std::move(a), std::move(b)); }
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::implies, std::move(a), std::move(b)); }
FormulaPtr f_forall(std::string x, FormulaPtr body) { return quantifier(FormulaKind::forall, std::move(x), std::move(body)); }
FormulaPtr f_exists(std::string x, FormulaPtr body) { return quantifier(FormulaKind::exists, std::move(x), std::move(body)); }

bool Formula::operator==(const Formula& other) const {
    if (kind != other.kind || var1 != other.var1 || var2 != other.var2 ||
        args != other.args)
        return false;
    auto same = [](const FormulaPtr& a, const FormulaPtr& b) {
        if (!a || !b) return !a && !b;
        return *a == *b;
    };
    return same(left, other.left) && same(right, other.right);
}

// ---------------------------------------------------------------------------
// Concrete syntax

namespace {

struct Token {
    enum Kind { ident, sym, end } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
            ++i_;
        tok_.pos = i_;
        if (i_ >= text_.size()) {
            tok_ = {Token::end, "", i_};
            return;
        }
        char c = text_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            tok_ = {Token::ident, text_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (c == '-' && i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
            tok_ = {Token::sym, "->", i_};
            i_ += 2;
            return;
        }
        if (std::string("~=!()&|,").find(c) != std::string::npos) {
            tok_ = {Token::sym, std::string(1, c), i_};
            ++i_;
            return;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", i_);
    }

    const std::string& text_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    FormulaPtr parse_all() {
        auto f = formula();
        if (lex_.peek().kind != Token::end)
            throw ParseError("trailing input", lex_.peek().pos);
        return f;
    }

private:
    FormulaPtr formula() {
        const Token& t = lex_.peek();
        if (t.kind == Token::sym && t.text == "!") {
            lex_.take();
            return f_not(formula());
        }
        if (t.kind == Token::sym && t.text == "(") {
            lex_.take();
            return paren_content();
        }
        if (t.kind == Token::ident && (t.text == "forall" || t.text == "exists")) {
            Token q = lex_.take();
            Token v = lex_.take();
            if (v.kind != Token::ident)
                throw ParseError("expected a variable after '" + q.text + "'", v.pos);
            expect("(");
            auto body = paren_content();
            return q.text == "forall" ? f_forall(v.text, std::move(body))
                                      : f_exists(v.text, std::move(body));
        }
        if (t.kind == Token::ident) return atom();
        throw ParseError("expected a formula", t.pos);
    }

    // everything after an opening '(': either a grouped formula or a binary
    // combination, then the matching ')'; quantifier bodies share the parens
    FormulaPtr paren_content() {
        auto a = formula();
        Token op = lex_.take();
        if (op.kind == Token::sym && op.text == ")") return a;
        if (op.kind != Token::sym ||
            (op.text != "&" && op.text != "|" && op.text != "->"))
            throw ParseError("expected '&', '|', '->' or ')'", op.pos);
        auto b = formula();
        expect(")");
        if (op.text == "&") return f_and(std::move(a), std::move(b));
        if (op.text == "|") return f_or(std::move(a), std::move(b));
        return f_implies(std::move(a), std::move(b));
    }

    FormulaPtr atom() {
        Token a = lex_.take();
        Token op = lex_.take();
        if (op.kind == Token::sym && (op.text == "~" || op.text == "=")) {
            Token b = lex_.take();
            if (b.kind != Token::ident)
                throw ParseError("expected an identifier", b.pos);
            return op.text == "~" ? f_adj(a.text, b.text) : f_eq(a.text, b.text);
        }
        if (op.kind == Token::sym && op.text == "(") {
            std::vector<std::string> args;
            for (;;) {
                Token v = lex_.take();
                if (v.kind != Token::ident)
                    throw ParseError("expected an identifier", v.pos);
                args.push_back(v.text);
                Token sep = lex_.take();
                if (sep.kind == Token::sym && sep.text == ",") continue;
                if (sep.kind == Token::sym && sep.text == ")") break;
                throw ParseError("expected ',' or ')'", sep.pos);
            }
            auto f = std::make_shared<Formula>();
            f->kind = FormulaKind::edge;
            f->var1 = a.text;
            f->args = std::move(args);
            return f;
        }
        throw ParseError("expected '~', '=' or '('", op.pos);
    }

    void expect(const std::string& s) {
        Token t = lex_.take();
        if (t.kind != Token::sym || t.text != s)
            throw ParseError("expected '" + s + "'", t.pos);
    }

    Lexer lex_;
};

} // namespace

FormulaPtr parse(const std::string& text) { return Parser(text).parse_all(); }

std::string print(const Formula& f) {
    switch (f.kind) {
    case FormulaKind::adj: return f.var1 + " ~ " + f.var2;
    case FormulaKind::eq: return f.var1 + " = " + f.var2;
    case FormulaKind::edge: {
        std::string s = f.var1 + "(";
        for (std::size_t i = 0; i < f.args.size(); ++i) {
            if (i) s += ",";
            s += f.args[i];
        }
        return s + ")";
    }
    case FormulaKind::not_: return "!" + print(*f.left);
    case FormulaKind::and_: return "(" + print(*f.left) + " & " + print(*f.right) + ")";
    case FormulaKind::or_: return "(" + print(*f.left) + " | " + print(*f.right) + ")";
    case FormulaKind::implies:
        return "(" + print(*f.left) + " -> " + print(*f.right) + ")";
    case FormulaKind::forall: return "forall " + f.var1 + " (" + print(*f.left) + ")";
    case FormulaKind::exists: return "exists " + f.var1 + " (" + print(*f.left) + ")";
    }
    return "";
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
    auto note = [&](const std::string& v) {
        if (std::find(bound.begin(), bound.end(), v) != bound.end()) return;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    switch (f.kind) {
    case FormulaKind::adj:
    case FormulaKind::eq:
        note(f.var1);
        note(f.var2);
        break;
    case FormulaKind::edge:
        for (const auto& a : f.args) note(a);
        break;
    case FormulaKind::not_:
        collect_free(*f.left, bound, out);
        break;
    case FormulaKind::and_:
    case FormulaKind::or_:
    case FormulaKind::implies:
        collect_free(*f.left, bound, out);
        collect_free(*f.right, bound, out);
        break;
    case FormulaKind::forall:
    case FormulaKind::exists:
        bound.push_back(f.var1);
        collect_free(*f.left, bound, out);
        bound.pop_back();
        break;
    }
}

} // namespace

std::vector<std::string> free_vars(const Formula& f) {
    std::vector<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

FormulaPtr parse_sentence(const std::string& text) {
    auto f = parse(text);
    auto fv = free_vars(*f);
    if (!fv.empty())
        throw ParseError("unbound variable '" + fv.front() + "'", 0);
    return f;
}

// ---------------------------------------------------------------------------
// Finite-model evaluation

namespace {

using Env = std::vector<std::pair<std::string, std::size_t>>;

std::size_t lookup(const Env& env, const std::string& v) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == v) return it->second;
    throw std::logic_error("unbound variable '" + v + "'");
}

bool quantifier_free(const Formula& f) {
    switch (f.kind) {
    case FormulaKind::forall:
    case FormulaKind::exists:
        return false;
    case FormulaKind::edge:
        return false; // no packed representation; take the generic path
    case FormulaKind::not_:
        return quantifier_free(*f.left);
    case FormulaKind::and_:
    case FormulaKind::or_:
    case FormulaKind::implies:
        return quantifier_free(*f.left) && quantifier_free(*f.right);
    default:
        return true;
    }
}

// Does `var` occur free in f?  Quantifiers rebinding the name shadow it.
bool mentions_free(const Formula& f, const std::string& var) {
    switch (f.kind) {
    case FormulaKind::adj:
    case FormulaKind::eq:
        return f.var1 == var || f.var2 == var;
    case FormulaKind::edge:
        return std::find(f.args.begin(), f.args.end(), var) != f.args.end();
    case FormulaKind::not_:
        return mentions_free(*f.left, var);
    case FormulaKind::and_:
    case FormulaKind::or_:
    case FormulaKind::implies:
        return mentions_free(*f.left, var) || mentions_free(*f.right, var);
    case FormulaKind::forall:
    case FormulaKind::exists:
        return f.var1 != var && mentions_free(*f.left, var);
    }
    return false;
}

class FiniteEval {
public:
    explicit FiniteEval(const FiniteGraph& g) : g_(g) {}

    bool eval(const Formula& f, Env& env) const {
        switch (f.kind) {
        case FormulaKind::adj:
            return g_.adjacent(lookup(env, f.var1), lookup(env, f.var2));
        case FormulaKind::eq:
            return lookup(env, f.var1) == lookup(env, f.var2);
        case FormulaKind::edge:
            throw std::invalid_argument("edge atom over a plain graph");
        case FormulaKind::not_:
            return !eval(*f.left, env);
        case FormulaKind::and_:
            return eval(*f.left, env) && eval(*f.right, env);
        case FormulaKind::or_:
            return eval(*f.left, env) || eval(*f.right, env);
        case FormulaKind::implies:
            return !eval(*f.left, env) || eval(*f.right, env);
        case FormulaKind::forall:
        case FormulaKind::exists: {
            bool want = f.kind == FormulaKind::exists;
            if (quantifier_free(*f.left)) return sweep(f, env) == want ? want : !want;
            std::vector<std::uint64_t> bits;
            if (vec_of(*f.left, f.var1, env, bits)) {
                const std::size_t n = g_.size();
                for (std::size_t w = 0; w * 64 < n; ++w) {
                    std::uint64_t valid = valid_mask(w);
                    if (want && (bits[w] & valid)) return true;
                    if (!want && (bits[w] & valid) != valid) return false;
                }
                return !want;
            }
            for (std::size_t v = 0; v < g_.size(); ++v) {
                env.emplace_back(f.var1, v);
                bool r = eval(*f.left, env);
                env.pop_back();
                if (r == want) return want;
            }
            return !want;
        }
        }
        return false;
    }

private:
    // Word-at-a-time evaluation of a quantifier-free body over the quantified
    // variable: bit v of the returned word is the truth value at vertex
    // 64*w + v.  Subtrees not mentioning the variable collapse to constants.
    std::uint64_t word_of(const Formula& f, const std::string& var, std::size_t w,
                          Env& env) const {
        switch (f.kind) {
        case FormulaKind::adj: {
            bool l = f.var1 == var, r = f.var2 == var;
            if (l && r) return 0; // irreflexive
            if (l) return g_.row(lookup(env, f.var2))[w];
            if (r) return g_.row(lookup(env, f.var1))[w];
            return g_.adjacent(lookup(env, f.var1), lookup(env, f.var2)) ? ~0ull : 0;
        }
        case FormulaKind::eq: {
            bool l = f.var1 == var, r = f.var2 == var;
            if (l && r) return ~0ull;
            if (l || r) {
                std::size_t v = lookup(env, l ? f.var2 : f.var1);
                return v / 64 == w ? (1ull << (v % 64)) : 0;
            }
            return lookup(env, f.var1) == lookup(env, f.var2) ? ~0ull : 0;
        }
        case FormulaKind::not_:
            return ~word_of(*f.left, var, w, env);
        case FormulaKind::and_:
            return word_of(*f.left, var, w, env) & word_of(*f.right, var, w, env);
        case FormulaKind::or_:
            return word_of(*f.left, var, w, env) | word_of(*f.right, var, w, env);
        case FormulaKind::implies:
            return ~word_of(*f.left, var, w, env) | word_of(*f.right, var, w, env);
        default:
            throw std::logic_error("quantifier inside a packed body");
        }
    }

    bool sweep(const Formula& q, Env& env) const {
        bool exists = q.kind == FormulaKind::exists;
        const std::size_t n = g_.size();
        for (std::size_t w = 0; w * 64 < n; ++w) {
            std::uint64_t valid =
                n - w * 64 >= 64 ? ~0ull : ((1ull << (n - w * 64)) - 1);
            std::uint64_t val = word_of(*q.left, q.var1, w, env) & valid;
            if (exists && val) return true;
            if (!exists && val != valid) return false;
        }
        return !exists;
    }

    std::uint64_t valid_mask(std::size_t w) const {
        std::size_t n = g_.size();
        return n - w * 64 >= 64 ? ~0ull : ((1ull << (n - w * 64)) - 1);
    }

    std::size_t words() const { return (g_.size() + 63) / 64; }

    // Truth bitvector of f over `var`: bit v of out[w] is f at var = 64*w + v.
    // Handles quantifier-free pieces, boolean connectives, and one further
    // quantifier level whose body is itself quantifier-free; anything deeper
    // reports failure and the caller falls back to the value-at-a-time loop.
    bool vec_of(const Formula& f, const std::string& var, Env& env,
                std::vector<std::uint64_t>& out) const {
        const std::size_t nw = words();
        if (!mentions_free(f, var)) {
            bool v = eval(f, env);
            out.assign(nw, v ? ~0ull : 0);
            return true;
        }
        if (quantifier_free(f)) {
            out.resize(nw);
            for (std::size_t w = 0; w < nw; ++w) out[w] = word_of(f, var, w, env);
            return true;
        }
        switch (f.kind) {
        case FormulaKind::not_: {
            if (!vec_of(*f.left, var, env, out)) return false;
            for (auto& w : out) w = ~w;
            return true;
        }
        case FormulaKind::and_:
        case FormulaKind::or_:
        case FormulaKind::implies: {
            std::vector<std::uint64_t> rhs;
            if (!vec_of(*f.left, var, env, out) ||
                !vec_of(*f.right, var, env, rhs))
                return false;
            for (std::size_t w = 0; w < nw; ++w) {
                if (f.kind == FormulaKind::and_) out[w] &= rhs[w];
                else if (f.kind == FormulaKind::or_) out[w] |= rhs[w];
                else out[w] = ~out[w] | rhs[w];
            }
            return true;
        }
        case FormulaKind::exists:
            if (f.var1 == var || !quantifier_free(*f.left)) return false;
            exists_vec(*f.left, var, f.var1, env, out);
            return true;
        case FormulaKind::forall: {
            if (f.var1 == var || !quantifier_free(*f.left)) return false;
            exists_vec(*f_not(f.left), var, f.var1, env, out);
            for (auto& w : out) w = ~w;
            return true;
        }
        default:
            return false;
        }
    }

    // A conjunct of the inner body that mentions `var`, compiled down to a
    // word operation.  `adj` reads a row (of the scanned value when
    // other_is_z, of a fixed vertex otherwise); `eq` is a single bit.
    struct Lit {
        const Formula* fallback = nullptr; // non-literal: interpret instead
        bool neg = false;
        bool is_adj = false;
        bool degenerate = false; // both operands are `var`
        bool other_is_z = false;
        std::size_t fixed = 0;
    };

    // out = bits over `var` of (exists zvar: body), body quantifier-free.
    // Transposed evaluation: the conjuncts free of `var` form a gate bitvector
    // over zvar, and each admitted zvar value ORs its word vector over `var`
    // into the result.  The scan stops early once every bit is set.
    void exists_vec(const Formula& body, const std::string& var,
                    const std::string& zvar, Env& env,
                    std::vector<std::uint64_t>& out) const {
        std::vector<const Formula*> gate, dep;
        std::vector<const Formula*> stack{&body};
        while (!stack.empty()) {
            const Formula* c = stack.back();
            stack.pop_back();
            if (c->kind == FormulaKind::and_) {
                stack.push_back(c->left.get());
                stack.push_back(c->right.get());
            } else {
                (mentions_free(*c, var) ? dep : gate).push_back(c);
            }
        }

        std::vector<Lit> lits;
        for (const Formula* c : dep) {
            Lit lit;
            const Formula* a = c;
            while (a->kind == FormulaKind::not_) {
                lit.neg = !lit.neg;
                a = a->left.get();
            }
            if (a->kind != FormulaKind::adj && a->kind != FormulaKind::eq) {
                lit = Lit{c};
            } else {
                lit.is_adj = a->kind == FormulaKind::adj;
                bool l = a->var1 == var, r = a->var2 == var;
                if (l && r) {
                    lit.degenerate = true;
                } else {
                    const std::string& other = l ? a->var2 : a->var1;
                    lit.other_is_z = other == zvar;
                    if (!lit.other_is_z) lit.fixed = lookup(env, other);
                }
            }
            lits.push_back(lit);
        }

        const std::size_t n = g_.size(), nw = words();
        out.assign(nw, 0);
        for (std::size_t gw = 0; gw < nw; ++gw) {
            std::uint64_t admit = valid_mask(gw);
            for (const Formula* c : gate) admit &= word_of(*c, zvar, gw, env);
            while (admit) {
                std::size_t z = gw * 64 + std::countr_zero(admit);
                admit &= admit - 1;
                env.emplace_back(zvar, z);
                bool full = true;
                for (std::size_t w = 0; w < nw; ++w) {
                    std::uint64_t word = ~0ull;
                    for (const Lit& lit : lits) {
                        std::uint64_t lw;
                        if (lit.fallback) {
                            lw = word_of(*lit.fallback, var, w, env);
                        } else if (lit.degenerate) {
                            lw = (lit.is_adj ? 0 : ~0ull) ^ (lit.neg ? ~0ull : 0);
                        } else {
                            std::size_t o = lit.other_is_z ? z : lit.fixed;
                            if (lit.is_adj)
                                lw = g_.row(o)[w];
                            else
                                lw = o / 64 == w ? (1ull << (o % 64)) : 0;
                            if (lit.neg) lw = ~lw;
                        }
                        word &= lw;
                        if (!word) break;
                    }
                    out[w] |= word;
                    if ((out[w] & valid_mask(w)) != valid_mask(w)) full = false;
                }
                env.pop_back();
                if (full) return;
            }
        }
    }

    const FiniteGraph& g_;
};

} // namespace

bool eval_finite(const Formula& s, const FiniteGraph& g) {
    Env env;
    return FiniteEval(g).eval(s, env);
}

// ---------------------------------------------------------------------------
// sigma(m, n)

FormulaPtr sigma(std::size_t m, std::size_t n, bool distinct_z) {
    if (m + n == 0) throw std::invalid_argument("sigma needs at least one vertex");
    std::vector<std::string> us, vs;
    for (std::size_t i = 1; i <= m; ++i) us.push_back("u" + std::to_string(i));
    for (std::size_t j = 1; j <= n; ++j) vs.push_back("v" + std::to_string(j));

    auto conj = [](std::vector<FormulaPtr> parts) {
        FormulaPtr out = std::move(parts.front());
        for (std::size_t i = 1; i < parts.size(); ++i)
            out = f_and(std::move(out), std::move(parts[i]));
        return out;
    };

    std::vector<FormulaPtr> inner;
    for (const auto& u : us) inner.push_back(f_adj("z", u));
    for (const auto& v : vs) inner.push_back(f_not(f_adj("z", v)));
    if (distinct_z) {
        for (const auto& u : us) inner.push_back(f_not(f_eq("z", u)));
        for (const auto& v : vs) inner.push_back(f_not(f_eq("z", v)));
    }
    FormulaPtr body = f_exists("z", conj(std::move(inner)));

    std::vector<std::string> all = us;
    all.insert(all.end(), vs.begin(), vs.end());
    std::vector<FormulaPtr> distinct;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            distinct.push_back(f_not(f_eq(all[i], all[j])));
    if (!distinct.empty()) body = f_implies(conj(std::move(distinct)), std::move(body));

    for (auto it = all.rbegin(); it != all.rend(); ++it)
        body = f_forall(*it, std::move(body));
    return body;
}

// ---------------------------------------------------------------------------
// Truth in the homogeneous limit

namespace {

// Configuration: adjacency masks over the <= 64 currently bound vertices.
class LimitEval {
public:
    bool eval(const Formula& f, Env& env, std::vector<std::uint64_t>& masks) const {
        switch (f.kind) {
        case FormulaKind::adj: {
            std::size_t i = lookup(env, f.var1), j = lookup(env, f.var2);
            return i != j && ((masks[i] >> j) & 1);
        }
        case FormulaKind::eq:
            return lookup(env, f.var1) == lookup(env, f.var2);
        case FormulaKind::edge:
            throw std::invalid_argument("edge atom in the graph language");
        case FormulaKind::not_:
            return !eval(*f.left, env, masks);
        case FormulaKind::and_:
            return eval(*f.left, env, masks) && eval(*f.right, env, masks);
        case FormulaKind::or_:
            return eval(*f.left, env, masks) || eval(*f.right, env, masks);
        case FormulaKind::implies:
            return !eval(*f.left, env, masks) || eval(*f.right, env, masks);
        case FormulaKind::forall:
        case FormulaKind::exists: {
            bool want = f.kind == FormulaKind::exists;
            const std::size_t k = masks.size();
            if (k >= 63) throw std::invalid_argument("quantifier depth beyond 63");
            // identify with an existing configuration vertex
            for (std::size_t i = 0; i < k; ++i) {
                env.emplace_back(f.var1, i);
                bool r = eval(*f.left, env, masks);
                env.pop_back();
                if (r == want) return want;
            }
            // or adjoin a fresh vertex with any adjacency pattern: every
            // pattern occurs in the limit, and truth only depends on the
            // pattern
            for (std::uint64_t pattern = 0; pattern < (1ull << k); ++pattern) {
                masks.push_back(pattern);
                for (std::size_t i = 0; i < k; ++i)
                    if ((pattern >> i) & 1) masks[i] |= 1ull << k;
                env.emplace_back(f.var1, k);
                bool r = eval(*f.left, env, masks);
                env.pop_back();
                for (std::size_t i = 0; i < k; ++i) masks[i] &= ~(1ull << k);
                masks.pop_back();
                if (r == want) return want;
            }
            return !want;
        }
        }
        return false;
    }
};

} // namespace

bool decide_R(const Formula& s) {
    Env env;
    std::vector<std::uint64_t> masks;
    return LimitEval().eval(s, env, masks);
}

// ---------------------------------------------------------------------------
// Monte-Carlo harness

FiniteGraph sample_gnp(std::size_t N, double p, std::uint64_t sample_seed) {
    std::mt19937_64 rng(sample_seed);
    std::uint64_t threshold = 0;
    bool always = p >= 1.0;
    if (!always && p > 0.0) {
        long double t = static_cast<long double>(p) * 18446744073709551616.0L;
        threshold = t >= 18446744073709551615.0L
                        ? ~0ull
                        : static_cast<std::uint64_t>(t);
    }
    FiniteGraph g(N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            std::uint64_t draw = rng();
            if (always || draw < threshold) g.set_edge(i, j);
        }
    return g;
}

double mc_zero_one(const Formula& s, std::size_t N, std::size_t samples,
                   std::uint64_t seed, double p) {
    if (samples == 0) return 0.0;
    std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    workers = std::min(workers, samples);
    std::atomic<std::size_t> hits{0};
    auto run = [&](std::size_t worker) {
        std::size_t local = 0;
        for (std::size_t i = worker; i < samples; i += workers) {
            auto g = sample_gnp(N, p, mix64(mix64(seed) ^ i));
            if (eval_finite(s, g)) ++local;
        }
        hits += local;
    };
    std::vector<std::future<void>> futs;
    for (std::size_t w = 1; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, run, w));
    run(0);
    for (auto& f : futs) f.get();
    return static_cast<double>(hits.load()) / static_cast<double>(samples);
}

// ---------------------------------------------------------------------------
// Hypergraph machinery

Hypergraph derived_hypergraph(const std::vector<FiniteGraph>& F, const FiniteGraph& g) {
    for (const auto& f : F)
        if (f.size() == 0) throw std::invalid_argument("empty family member");
    Hypergraph h;
    h.n = g.size();
    std::set<std::size_t> sizes;
    for (const auto& f : F) sizes.insert(f.size());
    for (std::size_t k : sizes) {
        for_each_subset(g.size(), k, [&](const std::vector<std::size_t>& subset) {
            FiniteGraph induced = g.induced(subset);
            for (const auto& f : F) {
                if (f.size() != k) continue;
                if (graphs_isomorphic(induced, f)) {
                    h.edges.push_back(subset);
                    break;
                }
            }
        });
    }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

namespace {

class HyperEval {
public:
    explicit HyperEval(const Hypergraph& h) : h_(h) {}

    bool eval(const Formula& f, Env& env) const {
        switch (f.kind) {
        case FormulaKind::adj:
            throw std::invalid_argument("adjacency atom over a hypergraph");
        case FormulaKind::eq:
            return lookup(env, f.var1) == lookup(env, f.var2);
        case FormulaKind::edge: {
            std::vector<std::size_t> vals;
            for (const auto& a : f.args) vals.push_back(lookup(env, a));
            std::sort(vals.begin(), vals.end());
            if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
                return false;
            return std::binary_search(h_.edges.begin(), h_.edges.end(), vals);
        }
        case FormulaKind::not_:
            return !eval(*f.left, env);
        case FormulaKind::and_:
            return eval(*f.left, env) && eval(*f.right, env);
        case FormulaKind::or_:
            return eval(*f.left, env) || eval(*f.right, env);
        case FormulaKind::implies:
            return !eval(*f.left, env) || eval(*f.right, env);
        case FormulaKind::forall:
        case FormulaKind::exists: {
            bool want = f.kind == FormulaKind::exists;
            for (std::size_t v = 0; v < h_.n; ++v) {
                env.emplace_back(f.var1, v);
                bool r = eval(*f.left, env);
                env.pop_back();
                if (r == want) return want;
            }
            return !want;
        }
        }
        return false;
    }

private:
    const Hypergraph& h_;
};

} // namespace

bool eval_hyper(const Formula& s, const Hypergraph& h) {
    Env env;
    return HyperEval(h).eval(s, env);
}

FormulaPtr translate(const Formula& hs, const std::vector<FiniteGraph>& F) {
    switch (hs.kind) {
    case FormulaKind::adj:
        return f_adj(hs.var1, hs.var2);
    case FormulaKind::eq:
        return f_eq(hs.var1, hs.var2);
    case FormulaKind::edge: {
        const std::size_t k = hs.args.size();
        FormulaPtr disjunction;
        for (const auto& member : F) {
            if (member.size() != k) continue;
            std::vector<std::size_t> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                FormulaPtr conj;
                auto add = [&](FormulaPtr part) {
                    conj = conj ? f_and(std::move(conj), std::move(part))
                                : std::move(part);
                };
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = i + 1; j < k; ++j) {
                        add(f_not(f_eq(hs.args[i], hs.args[j])));
                        auto adj = f_adj(hs.args[i], hs.args[j]);
                        add(member.adjacent(perm[i], perm[j]) ? adj : f_not(adj));
                    }
                if (k == 1) add(f_eq(hs.args[0], hs.args[0]));
                disjunction = disjunction
                                  ? f_or(std::move(disjunction), std::move(conj))
                                  : std::move(conj);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        if (!disjunction)
            throw std::invalid_argument("no family member of arity " +
                                        std::to_string(k));
        return disjunction;
    }
    case FormulaKind::not_:
        return f_not(translate(*hs.left, F));
    case FormulaKind::and_:
        return f_and(translate(*hs.left, F), translate(*hs.right, F));
    case FormulaKind::or_:
        return f_or(translate(*hs.left, F), translate(*hs.right, F));
    case FormulaKind::implies:
        return f_implies(translate(*hs.left, F), translate(*hs.right, F));
    case FormulaKind::forall:
        return f_forall(hs.var1, translate(*hs.left, F));
    case FormulaKind::exists:
        return f_exists(hs.var1, translate(*hs.left, F));
    }
    throw std::logic_error("unreachable");
}

} // namespace rado
