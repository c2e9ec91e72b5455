#include "dehn/rational.hpp"

#include <cctype>
#include <ostream>

namespace dehn {

namespace {

// Strict integer literal: optional '-', then one or more digits.
bool valid_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_literal(text))
            throw std::invalid_argument("invalid rational literal: '" + text + "'");
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_literal(num) || !valid_integer_literal(den))
        throw std::invalid_argument("invalid rational literal: '" + text + "'");
    Integer d(den);
    if (d == 0) throw std::invalid_argument("invalid rational literal (zero denominator): '" + text + "'");
    return Rational(Integer(num), d);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace dehn
