#pragma once
// Exact rational scalars. We use GMP's mpq_class directly and fix one text
// form for the whole project: "p/q" in lowest terms with positive q, the
// "/q" part omitted when q == 1. Parsing accepts both forms and rejects a
// zero denominator.

#include <gmpxx.h>

#include <string>

namespace sfc {

using Rat = mpq_class;

// Parse "p" or "p/q" (optional leading '-'); throws Error on anything else,
// including "1/0".
Rat rat_parse(const std::string& text);

std::string rat_str(const Rat& r);

Rat rat_abs(const Rat& r);

// Convenience for small literals in tests and constructions.
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

} // namespace sfc
