#ifndef HMV_RATIONAL_HPP
#define HMV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "hmv/errors.hpp"

namespace hmv {

// Rationals travel through JSON as "p/q" strings (or "p" when integral).
inline mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw bad_input("cannot parse rational '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string format_rational(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace hmv

#endif
