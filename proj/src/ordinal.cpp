#include "ordlab/ordinal.hpp"

#include <cctype>
#include <limits>
#include <utility>

namespace ordlab {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw overflow_error("ordinal coefficient overflow in addition");
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
        throw overflow_error("ordinal coefficient overflow in multiplication");
    return a * b;
}

ordinal tail(const ordinal& a) {
    const auto& t = a.terms();
    return ordinal(std::vector<ordinal::term>(t.begin() + 1, t.end()));
}

}  // namespace

ordinal::ordinal(std::uint64_t n) {
    if (n > 0) terms_.push_back(term{ordinal(), n});
}

ordinal::ordinal(int n) {
    if (n < 0) throw domain_error("ordinals are nonnegative");
    if (n > 0) terms_.push_back(term{ordinal(), static_cast<std::uint64_t>(n)});
}

ordinal::ordinal(std::vector<term> terms) : terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coefficient == 0)
            throw domain_error("CNF coefficient must be positive");
        if (i > 0 && !(terms_[i - 1].exponent > terms_[i].exponent))
            throw domain_error("CNF exponents must be strictly decreasing");
    }
}

ordinal ordinal::omega() { return ordinal({term{ordinal(1), 1}}); }

bool ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t ordinal::finite_value() const {
    if (terms_.empty()) return 0;
    if (!is_finite()) throw domain_error("ordinal is infinite");
    return terms_[0].coefficient;
}

const ordinal& ordinal::degree() const {
    if (terms_.empty()) throw domain_error("degree of 0 is undefined");
    return terms_[0].exponent;
}

std::uint64_t ordinal::leading_coefficient() const {
    if (terms_.empty()) throw domain_error("0 has no leading coefficient");
    return terms_[0].coefficient;
}

bool operator==(const ordinal& a, const ordinal& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const ordinal& a, const ordinal& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
        if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
    }
    return x.size() <=> y.size();
}

bool operator==(const ordinal::term& a, const ordinal::term& b) {
    return a.coefficient == b.coefficient && a.exponent == b.exponent;
}

ordinal add(const ordinal& a, const ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const ordinal& e = b.terms().front().exponent;
    std::vector<ordinal::term> out;
    std::uint64_t lead = b.terms().front().coefficient;
    for (const auto& t : a.terms()) {
        if (t.exponent > e)
            out.push_back(t);
        else {
            // terms of `a` at the merge exponent combine; lower ones vanish
            if (t.exponent == e) lead = checked_add(t.coefficient, lead);
            break;
        }
    }
    out.push_back(ordinal::term{e, lead});
    out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
    return ordinal(std::move(out));
}

ordinal mul(const ordinal& a, const ordinal& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ordinal acc;
    for (const auto& t : b.terms()) {
        ordinal part;
        if (t.exponent.is_zero()) {
            // a * n multiplies only the leading coefficient
            std::vector<ordinal::term> v(a.terms());
            v.front().coefficient = checked_mul(v.front().coefficient, t.coefficient);
            part = ordinal(std::move(v));
        } else {
            part = ordinal({ordinal::term{add(a.degree(), t.exponent), t.coefficient}});
        }
        acc = add(acc, part);
    }
    return acc;
}

ordinal omega_pow(const ordinal& e) { return ordinal({ordinal::term{e, 1}}); }

ordinal pow_omega(const ordinal& a) {
    if (a.is_zero()) throw domain_error("pow_omega requires a >= 1");
    if (a == ordinal(1)) return ordinal(1);
    if (a.is_finite()) return ordinal::omega();
    return omega_pow(mul(a.degree(), ordinal::omega()));
}

ordinal left_subtract(const ordinal& a, const ordinal& b) {
    auto cmp = a <=> b;
    if (cmp == std::strong_ordering::equal) return {};
    if (cmp == std::strong_ordering::greater)
        throw domain_error("left_subtract requires a <= b");
    if (a.is_zero()) return b;
    const auto& x = a.terms().front();
    const auto& y = b.terms().front();
    if (x.exponent < y.exponent) return b;
    // a < b with equal leading exponents
    if (x.coefficient == y.coefficient) return left_subtract(tail(a), tail(b));
    std::vector<ordinal::term> out;
    out.push_back(ordinal::term{y.exponent, y.coefficient - x.coefficient});
    out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
    return ordinal(std::move(out));
}

omega_pow_division divide_by_omega_pow(const ordinal& a, const ordinal& e) {
    std::vector<ordinal::term> q, r;
    for (const auto& t : a.terms()) {
        if (t.exponent >= e)
            q.push_back(ordinal::term{left_subtract(e, t.exponent), t.coefficient});
        else
            r.push_back(t);
    }
    return {ordinal(std::move(q)), ordinal(std::move(r))};
}

ordinal successor(const ordinal& a) { return add(a, ordinal(1)); }

ordinal predecessor(const ordinal& a) {
    if (a.is_zero() || is_limit(a))
        throw domain_error("predecessor requires a successor ordinal");
    std::vector<ordinal::term> v(a.terms());
    if (v.back().coefficient > 1)
        v.back().coefficient -= 1;
    else
        v.pop_back();
    return ordinal(std::move(v));
}

bool is_limit(const ordinal& a) {
    return !a.is_zero() && !a.terms().back().exponent.is_zero();
}

ordinal degree(const ordinal& a) { return a.degree(); }

std::string format(const ordinal& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& t : a.terms()) {
        if (!out.empty()) out += " + ";
        if (t.exponent.is_zero()) {
            out += std::to_string(t.coefficient);
            continue;
        }
        if (t.exponent == ordinal(1))
            out += "w";
        else if (t.exponent.is_finite())
            out += "w^" + std::to_string(t.exponent.finite_value());
        else if (t.exponent == ordinal::omega())
            out += "w^w";
        else
            out += "w^(" + format(t.exponent) + ")";
        if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
    }
    return out;
}

namespace {

struct ordinal_parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
    bool peek_is(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) { throw syntax_error(msg, pos); }

    std::uint64_t nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a number");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
                throw overflow_error("coefficient exceeds the 64-bit natural range");
            v = v * 10 + d;
            ++pos;
        }
        return v;
    }

    ordinal atom() {
        skip_ws();
        if (pos >= s.size()) fail("expected an exponent");
        if (consume('w')) return ordinal::omega();
        if (consume('(')) {
            ordinal v = expr();
            if (!consume(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) return ordinal(nat());
        fail("expected an exponent");
    }

    ordinal factor() {
        skip_ws();
        if (pos >= s.size()) fail("expected 'w' or a number");
        if (consume('w')) {
            if (consume('^')) return omega_pow(atom());
            return ordinal::omega();
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) return ordinal(nat());
        fail("expected 'w' or a number");
    }

    ordinal term() {
        ordinal v = factor();
        if (consume('*')) v = mul(v, ordinal(nat()));
        return v;
    }

    ordinal expr() {
        ordinal v = term();
        while (consume('+')) v = add(v, term());
        return v;
    }
};

}  // namespace

ordinal parse_ordinal(std::string_view text) {
    ordinal_parser p{text};
    ordinal v = p.expr();
    if (!p.at_end()) p.fail("unexpected trailing input");
    return v;
}

}  // namespace ordlab
