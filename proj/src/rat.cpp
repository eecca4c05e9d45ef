#include "ordlab/rat.hpp"

#include <cctype>

namespace ordlab {

std::string format(const rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

namespace {

bigint parse_digits(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw syntax_error("expected digits", start);
    return bigint(std::string(text.substr(start, pos - start)));
}

}  // namespace

rat parse_rational(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    bigint num = parse_digits(text, pos);
    bigint den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_digits(text, pos);
    }
    if (pos != text.size()) throw syntax_error("unexpected trailing input", pos);
    if (den == 0) throw domain_error("rational denominator must be nonzero");
    if (negative) num = -num;
    return rat(num, den);
}

}  // namespace ordlab
