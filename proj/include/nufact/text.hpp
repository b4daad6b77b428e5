#pragma once

/**
 * @file text.hpp
 * @brief Text syntax for every value type the CLI reads or prints.
 *
 *   group      "3" = Z/3, "2x4" = Z/2 x Z/4
 *   element    "2" (cyclic) or "1,0"
 *   sequence   "1^3 2^3"  (element^multiplicity, whitespace separated; "[]" is empty)
 *   quad       "1+1*w", "8", "2-w"     (w = (1+sqrt(-23))/2)
 *   quaternion "1-2i+k", "(1/2)-i+((r3-2)/2)k"   (r3 = sqrt 3)
 *   cycles     "cycles=Q1>Q2>Q3;P"  (prefix optional)
 *   divisor    "2Q1+Q3", "0"
 *   word       "Q1*Q2*Q3"  (empty string is the empty word)
 *   matrix     "[[0,1,1],[0,0,1],[0,0,0]]", or names T, J, Q1..Ql, joined by '*'
 */

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nufact/abelian.hpp"
#include "nufact/divcalc.hpp"
#include "nufact/errors.hpp"
#include "nufact/quadring.hpp"
#include "nufact/quatcheck.hpp"
#include "nufact/tring.hpp"
#include "nufact/zerosum.hpp"

namespace nufact::text {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t n = 0; n <= s.size(); ++n)
        if (n == s.size() || s[n] == sep) {
            out.push_back(s.substr(start, n - start));
            start = n + 1;
        }
    return out;
}

inline std::int64_t parse_int(std::string_view s, const char* what) {
    s = trim(s);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
    return v;
}

/// Recursive-descent parser for ring expressions with integer literals,
/// identifiers, + - * /, parentheses and implicit multiplication ("2i").
template <class Value, class Traits>
class ExprParser {
public:
    explicit ExprParser(std::string_view src) : src_(src) {}

    Value parse() {
        auto v = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("in '" + std::string(src_) + "': " + msg);
    }
    bool starts_factor(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    Value expr() {
        Value acc = Traits::from_int(0);
        bool first = true;
        while (true) {
            char c = peek();
            bool negate = false;
            if (c == '+' || c == '-') {
                negate = c == '-';
                ++pos_;
            } else if (!first) {
                return acc;
            }
            auto t = term();
            acc = Traits::add(acc, negate ? Traits::neg(t) : t);
            first = false;
        }
    }

    Value term() {
        auto acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = Traits::mul(acc, factor());
            } else if (c == '/') {
                ++pos_;
                auto d = factor();
                auto q = Traits::div(acc, d);
                if (!q) fail("division not exact or by a non-scalar");
                acc = *q;
            } else if (starts_factor(c)) {
                acc = Traits::mul(acc, factor());
            } else {
                return acc;
            }
        }
    }

    Value factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return Traits::neg(factor());
        }
        if (c == '(') {
            ++pos_;
            auto v = expr();
            if (peek() != ')') fail("missing ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return Traits::from_int(parse_int(src_.substr(start, pos_ - start), "integer literal"));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            auto start = pos_;
            while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            auto ident = src_.substr(start, pos_ - start);
            auto v = Traits::atom(ident);
            if (!v) fail("unknown symbol '" + std::string(ident) + "'");
            return *v;
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

struct QuadTraits {
    static QuadInt from_int(std::int64_t n) { return {n, 0}; }
    static std::optional<QuadInt> atom(std::string_view id) {
        if (id == "w") return QuadInt{0, 1};
        return std::nullopt;
    }
    static QuadInt add(const QuadInt& x, const QuadInt& y) {
        return {nufact::detail::checked_add(x.a, y.a), nufact::detail::checked_add(x.b, y.b)};
    }
    static QuadInt neg(const QuadInt& x) { return -x; }
    static QuadInt mul(const QuadInt& x, const QuadInt& y) { return qmul(x, y); }
    static std::optional<QuadInt> div(const QuadInt& x, const QuadInt& y) {
        if (y.is_zero()) return std::nullopt;
        return divides(y, x);
    }
};

struct QuatTraits {
    static QuatQ3 from_int(std::int64_t n) { return QuatQ3::scalar(SqrtRat{static_cast<long long>(n)}); }
    static std::optional<QuatQ3> atom(std::string_view id) {
        if (id == "i") return QuatQ3::i();
        if (id == "j") return QuatQ3::j();
        if (id == "k") return QuatQ3::k();
        if (id == "r3") return QuatQ3::scalar(SqrtRat::sqrt3());
        return std::nullopt;
    }
    static QuatQ3 add(const QuatQ3& x, const QuatQ3& y) { return x + y; }
    static QuatQ3 neg(const QuatQ3& x) { return -x; }
    static QuatQ3 mul(const QuatQ3& x, const QuatQ3& y) { return hmul(x, y); }
    static std::optional<QuatQ3> div(const QuatQ3& x, const QuatQ3& y) {
        if (!y.is_scalar() || y.w.is_zero()) return std::nullopt;
        return QuatQ3{x.w / y.w, x.x / y.w, x.y / y.w, x.z / y.w};
    }
};

inline bool is_label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

inline void check_label(std::string_view s) {
    if (s.empty() || !is_label_start(s.front())) throw ParseError("invalid label '" + std::string(s) + "'");
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw ParseError("invalid label '" + std::string(s) + "'");
}

}  // namespace detail

// ---- abelian groups and sequences ----

inline FinAbGroup parse_group(std::string_view s) {
    std::vector<std::int64_t> moduli;
    for (auto part : detail::split(detail::trim(s), 'x')) moduli.push_back(detail::parse_int(part, "group modulus"));
    for (auto n : moduli)
        if (n < 1) throw ParseError("group modulus must be >= 1");
    return FinAbGroup(std::move(moduli));
}

inline std::string format_group(const FinAbGroup& g) {
    std::string out;
    for (std::size_t i = 0; i < g.rank(); ++i) out += (i ? "x" : "") + std::to_string(g.moduli()[i]);
    return out;
}

inline GroupElement parse_element(const FinAbGroup& g, std::string_view s) {
    std::vector<std::int64_t> coords;
    for (auto part : detail::split(detail::trim(s), ',')) coords.push_back(detail::parse_int(part, "residue"));
    if (coords.size() != g.rank())
        throw ParseError("element '" + std::string(s) + "' needs " + std::to_string(g.rank()) + " residues");
    return g.element(std::move(coords));
}

inline std::string format_element(const GroupElement& e) {
    std::string out;
    for (std::size_t i = 0; i < e.coords().size(); ++i) out += (i ? "," : "") + std::to_string(e.coords()[i]);
    return out;
}

inline ZSeq parse_sequence(const FinAbGroup& g, std::string_view s) {
    ZSeq seq(g);
    s = detail::trim(s);
    if (s == "[]") return seq;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
        auto caret = tok.find('^');
        std::int64_t mult = 1;
        if (caret != std::string::npos) {
            mult = detail::parse_int(std::string_view(tok).substr(caret + 1), "multiplicity");
            if (mult < 0) throw ParseError("negative multiplicity in '" + tok + "'");
            tok.resize(caret);
        }
        seq.add(parse_element(g, tok), static_cast<std::uint64_t>(mult));
    }
    return seq;
}

inline std::string format_sequence(const ZSeq& s) {
    if (s.empty()) return "[]";
    std::string out;
    for (const auto& [e, m] : s.counts()) {
        if (!out.empty()) out += ' ';
        out += format_element(e);
        if (m != 1) out += "^" + std::to_string(m);
    }
    return out;
}

inline std::vector<GroupElement> parse_element_set(const FinAbGroup& g, std::string_view s) {
    std::vector<GroupElement> out;
    std::istringstream in{std::string(detail::trim(s))};
    std::string tok;
    while (in >> tok) {
        auto e = parse_element(g, tok);
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- quadratic order ----

inline QuadInt parse_quad(std::string_view s) {
    return detail::ExprParser<QuadInt, detail::QuadTraits>(s).parse();
}

inline std::string format_quad(const QuadInt& x) {
    if (x.b == 0) return std::to_string(x.a);
    std::string wpart = std::to_string(x.b < 0 ? -x.b : x.b) + "*w";
    if (x.a == 0) return (x.b < 0 ? "-" : "") + wpart;
    return std::to_string(x.a) + (x.b < 0 ? "-" : "+") + wpart;
}

// ---- quaternions over Q(sqrt 3) ----

inline QuatQ3 parse_quat(std::string_view s) {
    return detail::ExprParser<QuatQ3, detail::QuatTraits>(s).parse();
}

inline std::string format_rational(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline std::string format_sqrtrat(const SqrtRat& x) {
    if (x.v == 0) return format_rational(x.u);
    std::string v = x.v == 1 ? "r3" : x.v == -1 ? "-r3" : "(" + format_rational(x.v) + ")*r3";
    if (x.u == 0) return v;
    return format_rational(x.u) + (v.front() == '-' ? "" : "+") + v;
}

inline std::string format_quat(const QuatQ3& q) {
    std::string out;
    auto term = [&](const SqrtRat& c, const char* unit) {
        if (c.is_zero()) return;
        std::string body;
        bool negative = false;
        if (c.v == 0) {
            negative = c.u < 0;
            auto mag = format_rational(negative ? Rational(-c.u) : c.u);
            if (*unit && mag == "1")
                body = unit;
            else if (mag.find('/') != std::string::npos)
                body = "(" + mag + ")" + unit;
            else
                body = mag + unit;
        } else {
            body = "(" + format_sqrtrat(c) + ")" + unit;
        }
        if (out.empty())
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? "-" : "+") + body;
    };
    term(q.w, "");
    term(q.x, "i");
    term(q.y, "j");
    term(q.z, "k");
    return out.empty() ? "0" : out;
}

// ---- divisor calculus ----

inline CycleStructure parse_cycles(std::string_view s) {
    s = detail::trim(s);
    if (s.starts_with("cycles=")) s.remove_prefix(7);
    std::vector<std::vector<Label>> cycles;
    for (auto part : detail::split(s, ';')) {
        part = detail::trim(part);
        if (part.empty()) throw ParseError("empty cycle in cycle structure");
        std::vector<Label> cyc;
        for (auto lab : detail::split(part, '>')) {
            lab = detail::trim(lab);
            detail::check_label(lab);
            cyc.emplace_back(lab);
        }
        cycles.push_back(std::move(cyc));
    }
    try {
        return CycleStructure(std::move(cycles));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

inline std::string format_cycles(const CycleStructure& cs) {
    std::string out = "cycles=";
    for (std::size_t c = 0; c < cs.cycles().size(); ++c) {
        if (c) out += ';';
        for (std::size_t p = 0; p < cs.cycles()[c].size(); ++p) out += (p ? ">" : "") + cs.cycles()[c][p];
    }
    return out;
}

inline Divisor parse_divisor(std::string_view s) {
    s = detail::trim(s);
    Divisor d;
    if (s == "0" || s.empty()) return d;
    for (auto term : detail::split(s, '+')) {
        term = detail::trim(term);
        std::size_t n = 0;
        while (n < term.size() && std::isdigit(static_cast<unsigned char>(term[n]))) ++n;
        std::int64_t coeff = n == 0 ? 1 : detail::parse_int(term.substr(0, n), "coefficient");
        auto label = detail::trim(term.substr(n));
        if (label.starts_with("*")) label = detail::trim(label.substr(1));
        detail::check_label(label);
        d.add(std::string(label), static_cast<std::uint64_t>(coeff));
    }
    return d;
}

inline Divisor parse_divisor(const CycleStructure& cs, std::string_view s) {
    auto d = parse_divisor(s);
    check_divisor(cs, d);
    return d;
}

inline std::string format_divisor(const CycleStructure& cs, const Divisor& d) {
    std::string out;
    for (const auto& p : cs.labels()) {
        auto n = d[p];
        if (n == 0) continue;
        if (!out.empty()) out += '+';
        if (n != 1) out += std::to_string(n);
        out += p;
    }
    return out.empty() ? "0" : out;
}

inline std::vector<Label> parse_word(std::string_view s) {
    s = detail::trim(s);
    std::vector<Label> out;
    if (s.empty()) return out;
    for (auto part : detail::split(s, '*')) {
        part = detail::trim(part);
        detail::check_label(part);
        out.emplace_back(part);
    }
    return out;
}

inline std::string format_word(const std::vector<Label>& w) {
    std::string out;
    for (std::size_t n = 0; n < w.size(); ++n) out += (n ? "*" : "") + w[n];
    return out;
}

// ---- exponent matrices ----

inline tring::ExponentMatrix parse_matrix(std::string_view s, std::size_t l) {
    tring::ExponentMatrix acc;
    bool first = true;
    for (auto part : detail::split(detail::trim(s), '*')) {
        part = detail::trim(part);
        tring::ExponentMatrix m;
        if (part.starts_with("[")) {
            try {
                auto j = nlohmann::json::parse(part);
                m = tring::ExponentMatrix::from_rows(j.get<std::vector<std::vector<std::int64_t>>>());
            } catch (const nlohmann::json::exception& e) {
                throw ParseError("invalid matrix JSON '" + std::string(part) + "': " + e.what());
            } catch (const DomainError& e) {
                throw ParseError(e.what());
            }
            if (m.size() != l) throw ParseError("matrix size " + std::to_string(m.size()) + " but l = " + std::to_string(l));
        } else if (part == "T") {
            m = tring::ring_matrix(l);
        } else if (part == "J") {
            m = tring::jacobson_radical(l);
        } else if (part.size() > 1 && part.front() == 'Q') {
            auto idx = detail::parse_int(part.substr(1), "maximal ideal index");
            if (idx < 1 || static_cast<std::size_t>(idx) > l) throw ParseError("no maximal ideal " + std::string(part));
            m = tring::maximal_ideals(l)[static_cast<std::size_t>(idx - 1)];
        } else {
            throw ParseError("unknown matrix '" + std::string(part) + "'");
        }
        acc = first ? m : tring::mul(acc, m);
        first = false;
    }
    return acc;
}

inline std::string format_matrix_json(const tring::ExponentMatrix& m) { return nlohmann::json(m.rows()).dump(); }

/// Bracket style with D for exponent 0 and (π^k) otherwise.
inline std::string format_matrix_bracket(const tring::ExponentMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out += ' ';
            auto e = m(i, j);
            if (e == 0)
                out += "D";
            else if (e == 1)
                out += "(π)";
            else
                out += "(π^" + std::to_string(e) + ")";
        }
    }
    return out + "]";
}

}  // namespace nufact::text
