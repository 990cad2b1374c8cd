#include "lmmt/salamon.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lmmt {

namespace {

struct Term {
    Scalar coef;
    unsigned i = 0;
    unsigned j = 0;
    std::size_t at = 0;
};

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    std::size_t pos() const { return p_; }
    bool done() { skip_ws(); return p_ >= s_.size(); }
    char peek() { skip_ws(); return p_ < s_.size() ? s_[p_] : '\0'; }
    char peek_raw() const { return p_ < s_.size() ? s_[p_] : '\0'; }
    void bump(std::size_t k = 1) { p_ += k; }

    void skip_ws() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }

    // Length of a minus sign at the cursor: ASCII '-' or U+2212.
    std::size_t minus_len() const {
        if (p_ < s_.size() && s_[p_] == '-') return 1;
        if (s_.substr(p_, 3) == "\xE2\x88\x92") return 3;
        return 0;
    }

    // +1, -1 or 0 when no sign is present; consumes it.
    int take_sign() {
        skip_ws();
        if (peek_raw() == '+') {
            bump();
            return 1;
        }
        if (const auto m = minus_len()) {
            bump(m);
            return -1;
        }
        return 0;
    }

    std::string_view digits() {
        const std::size_t start = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        return s_.substr(start, p_ - start);
    }

    bool ident_start() const {
        if (p_ >= s_.size() || minus_len()) return false;
        const auto c = static_cast<unsigned char>(s_[p_]);
        return std::isalpha(c) || c == '_' || c >= 0x80;
    }

    std::string_view identifier() {
        const std::size_t start = p_;
        while (p_ < s_.size() && !minus_len()) {
            const auto c = static_cast<unsigned char>(s_[p_]);
            if (!(std::isalnum(c) || c == '_' || c >= 0x80)) break;
            ++p_;
        }
        return s_.substr(start, p_ - start);
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (peek_raw() != c) throw ParseError(std::string("expected ") + what, p_);
        ++p_;
    }

    std::string_view text() const { return s_; }

private:
    std::string_view s_;
    std::size_t p_ = 0;
};

unsigned to_index(std::string_view d, std::size_t at) {
    if (d.empty()) throw ParseError("expected basis index", at);
    unsigned v = 0;
    for (char c : d) {
        v = v * 10 + static_cast<unsigned>(c - '0');
        if (v > kMaxDimension) throw ParseError("basis index too large", at);
    }
    if (v == 0) throw ParseError("basis indices start at 1", at);
    return v;
}

void parse_bracket_pair(Cursor& cur, Term& t) {
    cur.expect('[', "'['");
    cur.skip_ws();
    std::size_t at = cur.pos();
    t.i = to_index(cur.digits(), at);
    cur.expect(',', "','");
    cur.skip_ws();
    at = cur.pos();
    t.j = to_index(cur.digits(), at);
    cur.expect(']', "']'");
}

Term parse_term(Cursor& cur, const ParameterMap& params) {
    Term t;
    cur.skip_ws();
    t.at = cur.pos();
    t.coef = Scalar(1);
    if (cur.peek_raw() == '[') {
        parse_bracket_pair(cur, t);
        return t;
    }
    if (std::isdigit(static_cast<unsigned char>(cur.peek_raw()))) {
        const std::string_view d = cur.digits();
        if (cur.peek_raw() == '/' || cur.peek_raw() == '.') {
            std::string num(d);
            if (cur.peek_raw() == '/') {
                cur.bump();
                const std::string_view den = cur.digits();
                if (den.empty()) throw ParseError("expected denominator", cur.pos());
                num += '/';
                num += den;
                if (cur.peek_raw() != '.') throw ParseError("expected '.' after coefficient", cur.pos());
            }
            cur.bump();
            try {
                t.coef = Scalar(parse_rational(num));
            } catch (const Error&) {
                throw ParseError("bad coefficient '" + num + "'", t.at);
            }
        } else {
            if (d.size() != 2) {
                throw ParseError("a bare index pair must have exactly two digits", t.at + std::min<std::size_t>(d.size(), 2));
            }
            t.i = to_index(d.substr(0, 1), t.at);
            t.j = to_index(d.substr(1, 1), t.at + 1);
            return t;
        }
    } else if (cur.ident_start()) {
        const std::string_view name = cur.identifier();
        auto it = params.find(name);
        if (it == params.end()) throw ParseError("unbound parameter '" + std::string(name) + "'", t.at);
        t.coef = Scalar(it->second);
        if (cur.peek_raw() != '.') throw ParseError("expected '.' after parameter", cur.pos());
        cur.bump();
    } else {
        throw ParseError("expected a term", t.at);
    }
    cur.skip_ws();
    const std::size_t at = cur.pos();
    if (cur.peek_raw() == '[') {
        parse_bracket_pair(cur, t);
    } else {
        const std::string_view d = cur.digits();
        if (d.size() != 2) throw ParseError("expected an index pair", at + std::min<std::size_t>(d.size(), 2));
        t.i = to_index(d.substr(0, 1), at);
        t.j = to_index(d.substr(1, 1), at + 1);
    }
    return t;
}

bool zero_expression(Cursor& cur) {
    cur.skip_ws();
    if (cur.peek_raw() != '0') return false;
    Cursor probe = cur;
    probe.bump();
    const char next = probe.peek();
    if (next == ',' || next == ')' || next == '\0') {
        cur.bump();
        return true;
    }
    return false;
}

std::vector<Term> parse_expression(Cursor& cur, const ParameterMap& params) {
    std::vector<Term> terms;
    if (zero_expression(cur)) return terms;
    int sign = cur.take_sign();
    if (sign == 0) sign = 1;
    while (true) {
        Term t = parse_term(cur, params);
        if (sign < 0) t.coef = -t.coef;
        terms.push_back(std::move(t));
        const char c = cur.peek();
        if (c == ',' || c == ')' || c == '\0') break;
        sign = cur.take_sign();
        if (sign == 0) throw ParseError("expected '+', '-' or ','", cur.pos());
    }
    return terms;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

}  // namespace

SalamonParse parse_salamon_checked(std::string_view text, const ParameterMap& params,
                                   const ParameterExclusions& exclusions) {
    Cursor cur(text);
    bool paren = false;
    if (cur.peek() == '(') {
        paren = true;
        cur.bump();
    }
    std::vector<std::vector<Term>> slots;
    while (true) {
        slots.push_back(parse_expression(cur, params));
        if (cur.peek() == ',') {
            cur.bump();
            continue;
        }
        break;
    }
    if (paren) cur.expect(')', "')'");
    if (!cur.done()) throw ParseError("unexpected trailing input", cur.pos());

    StructureConstants sc;
    sc.dim = static_cast<unsigned>(slots.size());
    if (sc.dim > 30) throw ParseError("at most 30 basis elements are supported", 0);
    for (unsigned k = 0; k < sc.dim; ++k) {
        for (const auto& t : slots[k]) {
            if (t.i > sc.dim || t.j > sc.dim) throw ParseError("index exceeds the algebra dimension", t.at);
            if (t.i == t.j) throw ParseError("repeated index in a pair", t.at);
            // de^k = c e^{ij} means [X_i, X_j] has X_k-component -c.
            sc.add(t.i - 1, t.j - 1, k, -t.coef);
        }
    }

    SalamonParse out{LieAlgebra(std::move(sc)), {}};
    for (const auto& [name, bad] : exclusions) {
        auto it = params.find(name);
        if (it == params.end()) continue;
        if (std::find(bad.begin(), bad.end(), it->second) != bad.end()) {
            std::string list;
            for (const auto& b : bad) list += (list.empty() ? "" : ", ") + rational_text(b);
            out.warnings.push_back("parameter " + name + " = " + rational_text(it->second) +
                                   " lies in the excluded set {" + list + "}");
        }
    }
    return out;
}

LieAlgebra parse_salamon(std::string_view text, const ParameterMap& params) {
    return parse_salamon_checked(text, params).algebra;
}

std::string to_salamon(const LieAlgebra& g) {
    const unsigned n = g.dimension();
    std::vector<std::vector<std::pair<std::pair<unsigned, unsigned>, Scalar>>> slots(n);
    for (const auto& [ij, row] : g.structure_constants().brackets) {
        for (const auto& [k, c] : row) slots[k].push_back({ij, -c});
    }
    std::ostringstream os;
    for (unsigned k = 0; k < n; ++k) {
        if (k) os << ',';
        auto& terms = slots[k];
        if (terms.empty()) {
            os << '0';
            continue;
        }
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        bool first = true;
        for (const auto& [ij, c] : terms) {
            if (!c.is_rational()) throw Error("Salamon notation needs rational structure constants");
            const Rational& q = c.rational_part();
            const bool neg = sgn(q) < 0;
            if (neg) {
                os << '-';
            } else if (!first) {
                os << '+';
            }
            first = false;
            const Rational a = neg ? Rational(-q) : q;
            if (a != 1) os << rational_text(a) << '.';
            if (n > 9) {
                os << '[' << ij.first + 1 << ',' << ij.second + 1 << ']';
            } else {
                os << ij.first + 1 << ij.second + 1;
            }
        }
    }
    return os.str();
}

KForm parse_form_text(std::string_view text, unsigned n) {
    struct Raw {
        Scalar c;
        std::vector<unsigned> idx;
        std::size_t at;
    };
    std::vector<Raw> raws;
    Cursor cur(text);
    if (cur.peek() == '0' && (cur.bump(), cur.done())) return KForm(n, 0);
    cur = Cursor(text);
    int sign = cur.take_sign();
    if (sign == 0) sign = 1;
    unsigned max_index = 0;
    while (true) {
        cur.skip_ws();
        Raw r{Scalar(1), {}, cur.pos()};
        if (cur.peek_raw() != 'e') {
            // coefficient: rational, optionally times sqrt(d)
            std::string num(cur.digits());
            if (num.empty()) throw ParseError("expected coefficient or basis form", cur.pos());
            if (cur.peek_raw() == '/') {
                cur.bump();
                const auto den = cur.digits();
                if (den.empty()) throw ParseError("expected denominator", cur.pos());
                num += '/';
                num += den;
            }
            r.c = Scalar(parse_rational(num));
            cur.expect('*', "'*'");
            cur.skip_ws();
            if (cur.text().substr(cur.pos(), 5) == "sqrt(") {
                cur.bump(5);
                const auto d = cur.digits();
                if (d.empty()) throw ParseError("expected radicand", cur.pos());
                cur.expect(')', "')'");
                cur.expect('*', "'*'");
                r.c = r.c * Scalar::sqrt(std::stol(std::string(d)));
            }
            cur.skip_ws();
            if (cur.peek_raw() != 'e') throw ParseError("expected basis form 'e...'", cur.pos());
        }
        cur.bump();
        const std::size_t at = cur.pos();
        const std::string_view first = cur.digits();
        if (first.empty()) throw ParseError("expected indices after 'e'", at);
        if (cur.peek_raw() == '_') {
            r.idx.push_back(to_index(first, at));
            while (cur.peek_raw() == '_') {
                cur.bump();
                const std::size_t a2 = cur.pos();
                r.idx.push_back(to_index(cur.digits(), a2));
            }
        } else {
            for (std::size_t i = 0; i < first.size(); ++i) r.idx.push_back(to_index(first.substr(i, 1), at + i));
        }
        for (unsigned i : r.idx) max_index = std::max(max_index, i);
        if (sign < 0) r.c = -r.c;
        raws.push_back(std::move(r));
        if (cur.done()) break;
        sign = cur.take_sign();
        if (sign == 0) throw ParseError("expected '+' or '-'", cur.pos());
    }
    if (n == 0) n = max_index;
    if (max_index > n) throw ParseError("form index exceeds the ambient dimension", 0);
    const unsigned degree = static_cast<unsigned>(raws.front().idx.size());
    KForm out(n, degree);
    for (const auto& r : raws) {
        if (r.idx.size() != degree) throw ParseError("terms of different degree", r.at);
        Mask m = 0;
        int s = 1;
        for (unsigned i : r.idx) {
            const Mask bit = Mask{1} << (i - 1);
            if (m & bit) throw ParseError("repeated index in a basis form", r.at);
            s *= wedge_sign(m, bit);
            m |= bit;
        }
        out.add_term(m, s < 0 ? -r.c : r.c);
    }
    return out;
}

}  // namespace lmmt
