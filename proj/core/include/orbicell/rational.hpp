#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace orbicell {

// Exact rational scalar. All arithmetic in the library is over Q so that
// every identity check is an equality of canonical p/q forms.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

// Serialized form is always "p/q" with q >= 1, bit-exact across runs.
inline std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace orbicell
