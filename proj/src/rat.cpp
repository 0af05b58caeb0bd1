#include "boole/rat.hpp"

#include <cctype>

#include "boole/errors.hpp"

namespace boole {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
    std::string num = text;
    std::string den = "1";
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
        negative = num[0] == '-';
        num = num.substr(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational: \"" + text + "\"");
    }
    mpz_class p(num, 10);
    mpz_class q(den, 10);
    if (q == 0) {
        throw ParseError("zero denominator in rational: \"" + text + "\"");
    }
    if (negative) p = -p;
    Rat r(p, q);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

std::string rat_vec_str(const std::vector<Rat>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += rat_str(v[i]);
    }
    out += "]";
    return out;
}

}  // namespace boole
