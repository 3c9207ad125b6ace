#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "nilform/dform.hpp"
#include "nilform/loci.hpp"
#include "nilform/polynomial.hpp"

namespace nilform {

// Which variable families an expression may use.
enum class VarMode { BaseOnly, Difference, Vertex };

namespace detail {

class Scanner {
public:
    Scanner(const std::string& src, int n, int m, VarMode mode)
        : src_(src), n_(n), m_(m), mode_(mode) {}

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= src_.size();
    }

    std::size_t pos() const { return pos_; }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // '**' must be two adjacent stars
    bool consume_power() {
        skip_ws();
        if (pos_ + 1 < src_.size() && src_[pos_] == '*' && src_[pos_ + 1] == '*') {
            pos_ += 2;
            return true;
        }
        return false;
    }

    bool peek_is_star_pair() {
        skip_ws();
        return pos_ + 1 < src_.size() && src_[pos_] == '*' && src_[pos_ + 1] == '*';
    }

    Integer integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw parse_error("expected a number", start);
        return Integer(src_.substr(start, pos_ - start));
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
    }

    bool peek_letter() {
        skip_ws();
        return pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]));
    }

    struct Ident {
        std::string letters;
        int first = 0;
        int second = -1; // for the y/v families
        std::size_t offset = 0;
    };

    Ident identifier() {
        skip_ws();
        Ident id;
        id.offset = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
            id.letters += src_[pos_++];
        if (id.letters.empty())
            throw parse_error("expected a variable", pos_);
        if (!peek_digit_raw())
            throw parse_error("variable '" + id.letters + "' needs an index", pos_);
        id.first = small_index();
        if (pos_ < src_.size() && src_[pos_] == '_') {
            ++pos_;
            if (!peek_digit_raw())
                throw parse_error("expected a column index after '_'", pos_);
            id.second = small_index();
        }
        return id;
    }

    Var variable() {
        const Ident id = identifier();
        return classify(id);
    }

    Var classify(const Ident& id) {
        if (id.letters == "x" && id.second < 0) {
            require_kind(VarKind::Base, id.offset);
            check_col(id.first, id.offset);
            return base_var(id.first);
        }
        if (id.letters == "y" && id.second >= 0) {
            require_kind(VarKind::Inf, id.offset);
            if (id.first < 1 || id.first > m_)
                throw parse_error("row index out of range in y" + std::to_string(id.first) + "_" +
                                      std::to_string(id.second),
                                  id.offset);
            check_col(id.second, id.offset);
            return inf_var(id.first, id.second);
        }
        if (id.letters == "v" && id.second >= 0) {
            require_kind(VarKind::Vertex, id.offset);
            if (id.first < 1 || id.first > m_ + 1)
                throw parse_error("vertex index out of range in v" + std::to_string(id.first) + "_" +
                                      std::to_string(id.second),
                                  id.offset);
            check_col(id.second, id.offset);
            return vertex_var(id.first, id.second);
        }
        throw parse_error("unknown variable '" + id.letters + "'", id.offset);
    }

private:
    bool peek_digit_raw() const {
        return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
    }

    int small_index() {
        const std::size_t start = pos_;
        long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1000000)
                throw parse_error("index too large", start);
            ++pos_;
        }
        return static_cast<int>(v);
    }

    void require_kind(VarKind kind, std::size_t offset) {
        const bool ok = (mode_ == VarMode::BaseOnly && kind == VarKind::Base) ||
                        (mode_ == VarMode::Difference &&
                         (kind == VarKind::Base || kind == VarKind::Inf)) ||
                        (mode_ == VarMode::Vertex && kind == VarKind::Vertex);
        if (!ok)
            throw parse_error("variable kind not allowed in these coordinates", offset);
    }

    void check_col(int j, std::size_t offset) {
        if (j < 1 || j > n_)
            throw parse_error("coordinate index out of range (n = " + std::to_string(n_) + ")",
                              offset);
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int n_, m_;
    VarMode mode_;
};

class PolyParser {
public:
    explicit PolyParser(Scanner& s) : s_(s) {}

    Poly expr() {
        bool neg = s_.consume('-');
        Poly acc = term();
        if (neg)
            acc = -acc;
        while (true) {
            if (s_.consume('+'))
                acc += term();
            else if (s_.consume('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (!s_.peek_is_star_pair() && s_.consume('*'))
            acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        if (s_.consume_power()) {
            const std::size_t off = s_.pos();
            const Integer e = s_.integer();
            if (e > 64)
                throw parse_error("exponent too large", off);
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    Poly primary() {
        if (s_.consume('(')) {
            Poly inner = expr();
            const std::size_t off = s_.pos();
            if (!s_.consume(')'))
                throw parse_error("expected ')'", off);
            return inner;
        }
        if (s_.peek_digit()) {
            Integer num = s_.integer();
            if (s_.consume('/')) {
                const std::size_t off = s_.pos();
                Integer den = s_.integer();
                if (den == 0)
                    throw parse_error("zero denominator", off);
                return Poly::constant(make_rational(num, den));
            }
            return Poly::constant(Rational(num));
        }
        if (s_.peek_letter())
            return Poly::var(s_.variable());
        throw parse_error("expected a value", s_.pos());
    }

private:
    Scanner& s_;
};

} // namespace detail

inline Poly parse_poly(const std::string& text, int n, int m, Coords coords) {
    detail::Scanner s(text, n, m,
                      coords == Coords::Vertex ? VarMode::Vertex : VarMode::Difference);
    detail::PolyParser p(s);
    Poly out = p.expr();
    if (!s.at_end())
        throw parse_error("unexpected trailing input", s.pos());
    return out;
}

inline Poly parse_base_poly(const std::string& text, int n) {
    detail::Scanner s(text, n, 0, VarMode::BaseOnly);
    detail::PolyParser p(s);
    Poly out = p.expr();
    if (!s.at_end())
        throw parse_error("unexpected trailing input", s.pos());
    return out;
}

struct ParsedForm {
    DForm form{1, 0};
    std::vector<std::string> warnings;
};

// Grammar: a sum of terms `(<poly>) dxJ^dxK^...`; a 0-form is a bare
// polynomial or a parenthesized one without a wedge part. A repeated index
// inside a wedge makes the term zero (accepted with a warning); terms of
// different degrees are rejected.
inline ParsedForm parse_form(const std::string& text, int n) {
    if (text.find("dx") == std::string::npos) {
        ParsedForm out;
        out.form = DForm(n, 0);
        out.form.add({}, parse_base_poly(text, n));
        return out;
    }

    detail::Scanner s(text, n, 0, VarMode::BaseOnly);
    detail::PolyParser pp(s);

    struct Term {
        Poly coeff;
        std::vector<int> wedge;
        std::size_t offset;
    };
    std::vector<Term> terms;

    bool first = true;
    while (true) {
        bool neg = false;
        if (first) {
            neg = s.consume('-');
        } else {
            if (s.at_end())
                break;
            if (s.consume('+'))
                neg = false;
            else if (s.consume('-'))
                neg = true;
            else
                throw parse_error("expected '+' or '-' between form terms", s.pos());
        }
        first = false;

        Term t;
        t.offset = s.pos();
        if (!s.consume('('))
            throw parse_error("expected '(' starting a form coefficient", s.pos());
        t.coeff = pp.expr();
        if (!s.consume(')'))
            throw parse_error("expected ')'", s.pos());
        if (neg)
            t.coeff = -t.coeff;

        // optional wedge part
        while (true) {
            if (!t.wedge.empty()) {
                if (!s.consume('^'))
                    break;
            } else if (!(s.peek() == 'd'))
                break;
            const std::size_t off = s.pos();
            auto id = s.identifier();
            if (id.letters != "dx" || id.second >= 0)
                throw parse_error("expected a wedge factor dx<j>", off);
            if (id.first < 1 || id.first > n)
                throw parse_error("wedge index out of range (n = " + std::to_string(n) + ")", off);
            t.wedge.push_back(id.first);
        }
        terms.push_back(std::move(t));
        if (s.at_end())
            break;
    }

    if (terms.empty())
        throw parse_error("empty form", 0);
    const int degree = static_cast<int>(terms[0].wedge.size());
    ParsedForm out;
    out.form = DForm(n, degree);
    for (const Term& t : terms) {
        if (static_cast<int>(t.wedge.size()) != degree)
            throw parse_error("mixed form degrees", t.offset);
        bool repeated = false;
        for (std::size_t a = 0; a < t.wedge.size() && !repeated; ++a)
            for (std::size_t b = a + 1; b < t.wedge.size(); ++b)
                if (t.wedge[a] == t.wedge[b])
                    repeated = true;
        if (repeated) {
            out.warnings.push_back("term with repeated wedge index is zero");
            continue;
        }
        out.form.add_unordered(t.wedge, t.coeff);
    }
    return out;
}

} // namespace nilform
