#ifndef DEGEN_RATIONAL_HPP
#define DEGEN_RATIONAL_HPP

// Exact arithmetic kernel. Every quantity in this project is an integer or a
// rational number; nothing is ever rounded, so all comparisons are exact.
// GMP does the heavy lifting, this header just fixes the types and the
// canonical "p/q" string form used throughout the reports.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace degen {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not canonicalize on construction; route all ad-hoc
// fractions through here so comparisons stay trustworthy.
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integral(q)) throw std::invalid_argument("expected an integer, got " + q.get_str());
    return q.get_num();
}

// "p" for integers, "p/q" otherwise. This is the only numeric format the
// tool ever prints; no floating point anywhere.
inline std::string rat_str(const Rat& q) { return q.get_str(); }
inline std::string int_str(const Int& n) { return n.get_str(); }

// Accepts "p" or "p/q" with an optional sign, used for CLI flag values.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rat q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

}  // namespace degen

#endif
