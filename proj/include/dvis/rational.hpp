#pragma once

#include <gmpxx.h>

#include <string>

namespace dvis {

// Exact rational scalar. All geometry in this library is computed over Rat;
// no floating point enters any predicate or construction.
using Rat = mpq_class;

// Parses "p/q" or "p" (optional sign, arbitrary precision). Throws
// std::invalid_argument on malformed input or zero denominator.
Rat rat_parse(const std::string& s);

// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string rat_str(const Rat& r);

// Lossy conversion, used only at the final serialization step (SVG).
double rat_double(const Rat& r);

inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace dvis
