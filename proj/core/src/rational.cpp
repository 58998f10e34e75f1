#include "mbb/rational.hpp"

#include "mbb/errors.hpp"

#include <cctype>

namespace mbb {

std::string rat_to_string(const Rat &r) { return r.str(); }

std::string int_to_string(const Int &i) { return i.str(); }

namespace {

bool valid_integer_token(const std::string &s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rat parse_rational(const std::string &text) {
    const auto slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den)) {
        throw ParseError("not a rational: '" + text + "'");
    }
    const Int p(num);
    const Int q(den);
    if (q == 0) {
        throw ParseError("zero denominator in rational: '" + text + "'");
    }
    return Rat(p, q);
}

Rat rat_pow(const Rat &r, std::int64_t e) {
    if (e < 0) {
        throw Error("rat_pow: negative exponent");
    }
    Rat result(1);
    Rat base = r;
    std::int64_t k = e;
    while (k > 0) {
        if (k & 1) {
            result *= base;
        }
        base *= base;
        k >>= 1;
    }
    return result;
}

Rat rat_abs(const Rat &r) { return r < 0 ? Rat(-r) : r; }

} // namespace mbb
