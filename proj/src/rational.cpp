#include "slackfc/rational.hpp"

#include "slackfc/errors.hpp"

namespace sfc {

namespace {

// Strict integer literal: optional '-', then digits only.
bool looks_like_int(const std::string& s) {
    if (s.empty()) return false;
    size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Rat rat_parse(const std::string& text) {
    const size_t slash = text.find('/');
    const std::string num_part = (slash == std::string::npos) ? text : text.substr(0, slash);
    const std::string den_part = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!looks_like_int(num_part) || !looks_like_int(den_part))
        throw Error("invalid rational literal '" + text + "'");
    mpz_class num(num_part, 10);
    mpz_class den(den_part, 10);
    if (den == 0)
        throw Error("invalid rational literal '" + text + "': zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

} // namespace sfc
