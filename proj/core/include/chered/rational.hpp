#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace chered {

// Exact rational scalar used everywhere. No floating point enters any
// computation path; doubles appear only in debug printers.
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize on its own.
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q". Decimal strings are rejected on purpose:
// parameter loci live on exact rational lines.
std::optional<Rat> parse_rat(const std::string& s);

std::string rat_str(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Requires is_integer(r) and a value that fits in long.
long rat_to_long(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Smallest positive n with n*r integral.
long rat_denominator(const Rat& r);

}  // namespace chered
