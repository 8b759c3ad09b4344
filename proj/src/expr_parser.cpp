// SPDX-License-Identifier: Apache-2.0
#include "ulrich/expr_parser.hpp"

#include "ulrich/errors.hpp"

#include <cctype>

namespace ulrich {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    BundleExpr parse() {
        BundleExpr out = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return out;
    }

private:
    BundleExpr expr() {
        skip_ws();
        if (accept_word("xi")) {
            Int a = 1;
            if (accept("^")) a = integer();
            expect("*");
            return BundleExpr::scroll_twist(a, surface());
        }
        return surface();
    }

    BundleExpr surface() {
        skip_ws();
        if (accept_word("Ext")) {
            expect("[");
            BundleExpr sub = surface();
            expect("->");
            BundleExpr quot = surface();
            expect("]");
            return BundleExpr::extension(std::move(sub), std::move(quot));
        }
        if (accept_word("S2E")) return BundleExpr::sym_square_e(optional_pair());
        if (accept_word("IZ")) {
            expect("(");
            Int a = integer();
            expect(",");
            Int b = integer();
            expect(";");
            Int len = integer();
            expect(")");
            if (len < 0) fail("ideal length must be non-negative");
            return BundleExpr::ideal_twist({a, b}, len);
        }
        if (accept_word("E")) return BundleExpr::twisted_e(optional_pair());
        if (accept_word("L")) {
            expect("(");
            Int a = integer();
            expect(",");
            Int b = integer();
            expect(")");
            return BundleExpr::line({a, b});
        }
        fail("expected one of L(, E(, S2E(, IZ(, Ext[");
    }

    SurfaceDivisor optional_pair() {
        expect("(");
        if (accept(")")) return {};
        Int a = integer();
        expect(",");
        Int b = integer();
        expect(")");
        return {a, b};
    }

    Int integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        Int v;
        if (!parse_int(s_.substr(start, pos_ - start), v)) {
            pos_ = start;
            fail("expected an integer");
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(const std::string& tok) {
        skip_ws();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    // A keyword must not run into further identifier characters (so "E"
    // does not match the start of "Ext").
    bool accept_word(const std::string& word) {
        skip_ws();
        if (s_.compare(pos_, word.size(), word) != 0) return false;
        const std::size_t end = pos_ + word.size();
        if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
        pos_ = end;
        return true;
    }

    void expect(const std::string& tok) {
        if (!accept(tok)) fail("expected '" + tok + "'");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse bundle expression at position " + std::to_string(pos_) + ": " + what +
                         " in \"" + s_ + "\"");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

BundleExpr parse_bundle_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace ulrich
