#ifndef AGKIT_RAT_HPP
#define AGKIT_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace agkit {

// Exact arithmetic substrate. cpp_rational keeps every value reduced with a
// positive denominator, which is exactly the Rat invariant.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string rat_str(const Rat& q) { return q.str(); }

inline double rat_double(const Rat& q) { return q.convert_to<double>(); }

inline long long rat_ll(const Rat& q) {
    if (denominator(q) != 1) throw error("rat_ll: not an integer: " + q.str());
    return numerator(q).convert_to<long long>();
}

inline bool rat_is_int(const Rat& q) { return denominator(q) == 1; }

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int out = 1;
    for (long i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

} // namespace agkit

#endif
