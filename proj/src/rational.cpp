#include "ehrhart_lab/rational.hpp"

#include "ehrhart_lab/errors.hpp"

#include <cctype>

namespace ehrhart_lab {

long to_long(const Integer& v) {
    if (!v.fits_slong_p()) {
        throw InternalError("integer out of range for machine word: " + v.get_str());
    }
    return v.get_si();
}

long to_long(const Rational& q) {
    if (!is_integer(q)) {
        throw InternalError("expected an integer value, got " + rational_string(q));
    }
    return to_long(num(q));
}

std::string rational_string(const Rational& q) {
    if (is_integer(q)) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    if (!valid_integer_token(num_part)) {
        throw InvalidParameter("malformed rational: '" + text + "'");
    }
    Integer n(num_part);
    Integer d(1);
    if (slash != std::string::npos) {
        const std::string den_part = text.substr(slash + 1);
        if (!valid_integer_token(den_part)) {
            throw InvalidParameter("malformed rational: '" + text + "'");
        }
        d = Integer(den_part);
        if (d == 0) {
            throw InvalidParameter("zero denominator in rational: '" + text + "'");
        }
    }
    return rat(n, d);
}

} // namespace ehrhart_lab
