#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace prymlab {

using Int = mpz_class;
using Rat = mpq_class;

// Renders a rational as "p" or "p/q" with q > 0.
inline std::string rat_to_string(const Rat &r) {
    Rat c(r);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string &s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rat &r) { return sgn(r); }

} // namespace prymlab
