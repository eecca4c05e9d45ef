#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordlab/errors.hpp"

namespace ordlab {

// An ordinal below epsilon_0 in Cantor normal form,
//
//     w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck
//
// with e1 > e2 > ... > ek (ordinals themselves) and every ci >= 1.
// The empty sum is 0. Exponent nesting is finite, which is exactly the
// ordinals below epsilon_0. Values are immutable; all operations are pure.
//
// Coefficients are 64-bit naturals; arithmetic that would exceed them
// throws overflow_error rather than wrapping.
class ordinal {
public:
    struct term;

    ordinal() = default;  // zero
    ordinal(std::uint64_t n);
    ordinal(int n);
    // Builds an ordinal from explicit CNF terms; throws domain_error if the
    // term list is not canonical.
    explicit ordinal(std::vector<term> terms);

    static ordinal omega();

    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    // Value of a finite ordinal; throws domain_error otherwise.
    std::uint64_t finite_value() const;

    const std::vector<term>& terms() const { return terms_; }
    // Leading exponent; throws domain_error for 0.
    const ordinal& degree() const;
    std::uint64_t leading_coefficient() const;

    friend bool operator==(const ordinal& a, const ordinal& b);
    friend std::strong_ordering operator<=>(const ordinal& a, const ordinal& b);

private:
    std::vector<term> terms_;  // strictly decreasing exponents
};

struct ordinal::term {
    ordinal exponent;
    std::uint64_t coefficient = 1;
};

bool operator==(const ordinal::term& a, const ordinal::term& b);

// Ordinal sum in CNF. Not commutative: low terms of `a` are absorbed by the
// leading term of `b` (1 + w = w, but w + 1 = w+1).
ordinal add(const ordinal& a, const ordinal& b);

// Ordinal product in CNF; left-distributes over the CNF of `b`.
ordinal mul(const ordinal& a, const ordinal& b);

// w^e. omega_pow(0) = 1.
ordinal omega_pow(const ordinal& e);

// a^w. Requires a >= 1: pow_omega(1) = 1, finite a >= 2 give w, and for
// a >= w with leading exponent e1 the value is w^(e1*w).
ordinal pow_omega(const ordinal& a);

struct omega_pow_division {
    ordinal quotient;
    ordinal remainder;  // remainder < w^e
};

// Left division a = w^e * quotient + remainder with remainder < w^e.
omega_pow_division divide_by_omega_pow(const ordinal& a, const ordinal& e);

// The unique d with a + d = b; requires a <= b.
ordinal left_subtract(const ordinal& a, const ordinal& b);

ordinal successor(const ordinal& a);
// Requires a successor ordinal (finite >= 1 included); throws domain_error.
ordinal predecessor(const ordinal& a);
bool is_limit(const ordinal& a);
// Leading exponent as a value; throws domain_error for 0.
ordinal degree(const ordinal& a);

// Canonical text form using only `w ^ * +` and parentheses, e.g.
// "w^(w^2)*3 + w*5 + 7". parse(format(a)) == a.
std::string format(const ordinal& a);

// Grammar (whitespace insignificant):
//   expr   := term ('+' term)*
//   term   := factor ('*' nat)?
//   factor := 'w' ('^' atom)? | nat
//   atom   := nat | 'w' | '(' expr ')'
// Non-canonical input is normalized ("w + w" parses to w*2).
// Throws syntax_error (with offset) or overflow_error.
ordinal parse_ordinal(std::string_view text);

}  // namespace ordlab
