#ifndef AGKIT_MPOLY_HPP
#define AGKIT_MPOLY_HPP

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "agkit/rat.hpp"

namespace agkit {

// Exponent vector of a monomial; length = ambient variable count.
using Exps = std::vector<int>;

// Hard cap on the weighted degree any single polynomial operation may produce.
inline constexpr int kDegreeCap = 64;

inline long weighted_degree(const Exps& e, const std::vector<int>& w) {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * w[i];
    return d;
}

inline bool divides(const Exps& a, const Exps& b) {
    // a | b componentwise
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exps exps_sub(const Exps& a, const Exps& b) {
    Exps out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Exps exps_add(const Exps& a, const Exps& b) {
    Exps out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Exps exps_lcm(const Exps& a, const Exps& b) {
    Exps out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

// Total order on monomials compatible with multiplication.
struct MonomialOrder {
    enum Kind { grevlex, lex, wgrevlex };
    Kind kind = grevlex;
    std::vector<int> weights; // used by wgrevlex

    static MonomialOrder make_grevlex() { return {grevlex, {}}; }
    static MonomialOrder make_lex() { return {lex, {}}; }
    static MonomialOrder make_wgrevlex(std::vector<int> w) { return {wgrevlex, std::move(w)}; }

    // strict "a < b"
    bool less(const Exps& a, const Exps& b) const {
        switch (kind) {
        case lex:
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        case grevlex:
        case wgrevlex: {
            long da, db;
            if (kind == grevlex) {
                da = std::accumulate(a.begin(), a.end(), 0L);
                db = std::accumulate(b.begin(), b.end(), 0L);
            } else {
                da = weighted_degree(a, weights);
                db = weighted_degree(b, weights);
            }
            if (da != db) return da < db;
            // graded tie-break: a > b iff the rightmost nonzero of a-b is negative
            for (size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] > b[i];
            return false;
        }
        }
        return false;
    }

    std::string name() const {
        switch (kind) {
        case grevlex: return "grevlex";
        case lex: return "lex";
        case wgrevlex: return "weighted-grevlex";
        }
        return "?";
    }
};

// Sparse multivariate polynomial with exact rational coefficients and an
// optional weighted grading. No zero coefficients are ever stored.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(int nvars, std::vector<int> weights = {})
        : nv_(nvars), w_(std::move(weights)) {
        if (nv_ <= 0) throw error("MPoly: variable count must be positive");
        if (w_.empty()) w_.assign(nv_, 1);
        if (static_cast<int>(w_.size()) != nv_) throw error("MPoly: weights size mismatch");
        for (int wi : w_) if (wi <= 0) throw error("MPoly: weights must be positive");
    }

    static MPoly constant(int nvars, const Rat& c, std::vector<int> weights = {}) {
        MPoly p(nvars, std::move(weights));
        if (c != 0) p.t_[Exps(nvars, 0)] = c;
        return p;
    }
    static MPoly variable(int nvars, int i, std::vector<int> weights = {}) {
        MPoly p(nvars, std::move(weights));
        Exps e(nvars, 0);
        e.at(i) = 1;
        p.t_[e] = 1;
        return p;
    }
    static MPoly monomial(int nvars, Exps e, const Rat& c, std::vector<int> weights = {}) {
        MPoly p(nvars, std::move(weights));
        if (static_cast<int>(e.size()) != nvars) throw error("MPoly::monomial: exponent size");
        if (c != 0) p.t_[std::move(e)] = c;
        return p;
    }

    int nvars() const { return nv_; }
    const std::vector<int>& weights() const { return w_; }
    const std::map<Exps, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }

    void set(const Exps& e, const Rat& c) {
        if (c == 0) t_.erase(e); else t_[e] = c;
    }
    void add_term(const Exps& e, const Rat& c) {
        auto it = t_.find(e);
        if (it == t_.end()) {
            if (c != 0) t_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    Rat coeff(const Exps& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? Rat(0) : it->second;
    }

    long degree() const { // weighted; -1 for the zero polynomial
        long d = -1;
        for (auto& [e, c] : t_) d = std::max(d, weighted_degree(e, w_));
        return d;
    }

    bool is_homogeneous() const {
        long d = -1;
        for (auto& [e, c] : t_) {
            long de = weighted_degree(e, w_);
            if (d == -1) d = de;
            else if (d != de) return false;
        }
        return true;
    }

    bool operator==(const MPoly& o) const { return nv_ == o.nv_ && t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly operator-() const {
        MPoly out(nv_, w_);
        for (auto& [e, c] : t_) out.t_[e] = -c;
        return out;
    }
    MPoly operator+(const MPoly& o) const {
        check_compat(o);
        MPoly out = *this;
        for (auto& [e, c] : o.t_) out.add_term(e, c);
        return out;
    }
    MPoly operator-(const MPoly& o) const {
        check_compat(o);
        MPoly out = *this;
        for (auto& [e, c] : o.t_) out.add_term(e, -c);
        return out;
    }
    MPoly operator*(const MPoly& o) const {
        check_compat(o);
        MPoly out(nv_, w_);
        if (t_.empty() || o.t_.empty()) return out;
        long cap_check = degree() + o.degree();
        if (cap_check > kDegreeCap)
            throw error("degree cap exceeded in multiplication (" +
                        std::to_string(cap_check) + " > " + std::to_string(kDegreeCap) + ")");
        for (auto& [ea, ca] : t_)
            for (auto& [eb, cb] : o.t_)
                out.add_term(exps_add(ea, eb), ca * cb);
        return out;
    }
    MPoly operator*(const Rat& c) const {
        MPoly out(nv_, w_);
        if (c == 0) return out;
        for (auto& [e, k] : t_) out.t_[e] = k * c;
        return out;
    }
    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly pow(int k) const {
        if (k < 0) throw error("MPoly::pow: negative exponent");
        MPoly out = constant(nv_, 1, w_);
        MPoly base = *this;
        while (k > 0) {
            if (k & 1) out = out * base;
            base_square_guard(base, k >>= 1);
            if (k) base = base * base;
        }
        return out;
    }

    // multiply by a single monomial (cheap path used by division and Buchberger)
    MPoly times_monomial(const Exps& e, const Rat& c) const {
        MPoly out(nv_, w_);
        if (c == 0) return out;
        for (auto& [ea, ca] : t_) out.t_[exps_add(ea, e)] = ca * c;
        return out;
    }

    // leading term with respect to an order
    std::pair<Exps, Rat> leading_term(const MonomialOrder& ord) const {
        if (t_.empty()) throw error("leading_term of zero polynomial");
        auto best = t_.begin();
        for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    MPoly monic(const MonomialOrder& ord) const {
        if (t_.empty()) return *this;
        auto [e, c] = leading_term(ord);
        MPoly out(nv_, w_);
        for (auto& [ee, cc] : t_) out.t_[ee] = cc / c;
        return out;
    }

    // substitute variable i -> args[i]; all args share one ambient ring
    MPoly substitute(const std::vector<MPoly>& args) const {
        if (static_cast<int>(args.size()) != nv_) throw error("substitute: arity mismatch");
        if (args.empty()) throw error("substitute: no arguments");
        const int rn = args[0].nvars();
        const auto& rw = args[0].weights();
        MPoly out(rn, rw);
        for (auto& [e, c] : t_) {
            MPoly term = MPoly::constant(rn, c, rw);
            for (int i = 0; i < nv_; ++i)
                if (e[i] > 0) term = term * args[i].pow(e[i]);
            out += term;
        }
        return out;
    }

    Rat eval(const std::vector<Rat>& x) const {
        if (static_cast<int>(x.size()) != nv_) throw error("eval: arity mismatch");
        Rat out = 0;
        for (auto& [e, c] : t_) {
            Rat term = c;
            for (int i = 0; i < nv_; ++i)
                for (int k = 0; k < e[i]; ++k) term *= x[i];
            out += term;
        }
        return out;
    }

    // keep only terms of weighted degree <= d
    MPoly truncated(long d) const {
        MPoly out(nv_, w_);
        for (auto& [e, c] : t_)
            if (weighted_degree(e, w_) <= d) out.t_[e] = c;
        return out;
    }
    // terms of weighted degree exactly d
    MPoly graded_part(long d) const {
        MPoly out(nv_, w_);
        for (auto& [e, c] : t_)
            if (weighted_degree(e, w_) == d) out.t_[e] = c;
        return out;
    }

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void check_compat(const MPoly& o) const {
        if (nv_ != o.nv_) throw error("variable-count mismatch");
        if (w_ != o.w_) throw error("grading-weights mismatch");
    }
    static void base_square_guard(const MPoly& base, int k) {
        if (k && !base.is_zero() && base.degree() * 2 > kDegreeCap)
            throw error("degree cap exceeded in pow");
    }

    int nv_ = 0;
    std::vector<int> w_;
    std::map<Exps, Rat> t_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

inline std::vector<std::string> default_names(int nv) {
    std::vector<std::string> out;
    for (int i = 0; i < nv; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

inline std::string MPoly::str(const std::vector<std::string>& names_in) const {
    if (t_.empty()) return "0";
    std::vector<std::string> names = names_in.empty() ? default_names(nv_) : names_in;
    // deterministic print order: grevlex descending
    MonomialOrder ord = MonomialOrder::make_grevlex();
    std::vector<const std::pair<const Exps, Rat>*> terms;
    for (auto& t : t_) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) { return ord.less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : terms) {
        const Exps& e = t->first;
        Rat c = t->second;
        bool neg = c < 0;
        if (first) { if (neg) os << "-"; }
        else os << (neg ? " - " : " + ");
        first = false;
        Rat a = neg ? Rat(-c) : c;
        bool allzero = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        bool coeff_one = (a == 1);
        if (!coeff_one || allzero) os << a.str();
        bool printed = !coeff_one || allzero;
        for (int i = 0; i < nv_; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Polynomial text grammar: vars x0..x9 or declared names, integer/rational
// literals, operators + - * ^, parentheses; whitespace-insensitive.

class PolyParser {
public:
    PolyParser(std::string src, std::vector<std::string> names, std::vector<int> weights)
        : s_(std::move(src)), names_(std::move(names)), w_(std::move(weights)) {}

    MPoly parse() {
        pos_ = 0;
        MPoly out = expr();
        skip_ws();
        if (pos_ != s_.size()) throw error("parse error at '" + s_.substr(pos_) + "'");
        return out;
    }

private:
    int nv() const { return static_cast<int>(names_.size()); }

    void skip_ws() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
    char peek() { skip_ws(); return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { skip_ws(); return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    MPoly expr() {
        MPoly out = peek() == '-' ? (get(), -term()) : term();
        while (true) {
            char c = peek();
            if (c == '+') { get(); out += term(); }
            else if (c == '-') { get(); out -= term(); }
            else break;
        }
        return out;
    }
    MPoly term() {
        MPoly out = factor();
        while (peek() == '*') { get(); out = out * factor(); }
        return out;
    }
    MPoly factor() {
        MPoly b = base();
        if (peek() == '^') {
            get();
            bool neg = false;
            if (peek() == '-') { get(); neg = true; }
            long k = integer_literal();
            if (neg) throw error("parse error: negative exponent");
            return b.pow(static_cast<int>(k));
        }
        return b;
    }
    MPoly base() {
        char c = peek();
        if (c == '(') {
            get();
            MPoly e = expr();
            if (get() != ')') throw error("parse error: expected ')'");
            return e;
        }
        if (c == '-') { get(); return -factor(); }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return var();
        throw error(std::string("parse error: unexpected '") + c + "'");
    }
    long integer_literal() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw error("parse error: expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }
    MPoly number() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        Int num(s_.substr(start, pos_ - start));
        if (pos_ < s_.size() && s_[pos_] == '/') {
            size_t save = pos_++;
            size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (dstart == pos_) { pos_ = save; return MPoly::constant(nv(), Rat(num), w_); }
            Int den(s_.substr(dstart, pos_ - dstart));
            if (den == 0) throw error("parse error: zero denominator");
            return MPoly::constant(nv(), Rat(num, den), w_);
        }
        return MPoly::constant(nv(), Rat(num), w_);
    }
    MPoly var() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        for (int i = 0; i < nv(); ++i)
            if (names_[i] == name) return MPoly::variable(nv(), i, w_);
        throw error("parse error: unknown variable '" + name + "'");
    }

    std::string s_;
    std::vector<std::string> names_;
    std::vector<int> w_;
    size_t pos_ = 0;
};

inline MPoly parse_poly(const std::string& src, const std::vector<std::string>& names,
                        std::vector<int> weights = {}) {
    if (weights.empty()) weights.assign(names.size(), 1);
    return PolyParser(src, names, weights).parse();
}

// enumerate all exponent vectors of weighted degree exactly d
inline void for_each_monomial(int nv, const std::vector<int>& w, long d,
                              const std::function<void(const Exps&)>& fn) {
    Exps e(nv, 0);
    std::function<void(int, long)> rec = [&](int i, long rem) {
        if (i == nv - 1) {
            if (rem % w[i] == 0) {
                e[i] = static_cast<int>(rem / w[i]);
                fn(e);
                e[i] = 0;
            }
            return;
        }
        for (long k = 0; k * w[i] <= rem; ++k) {
            e[i] = static_cast<int>(k);
            rec(i + 1, rem - k * w[i]);
        }
        e[i] = 0;
    };
    if (d >= 0) rec(0, d);
}

inline long monomial_count(int nv, const std::vector<int>& w, long d) {
    long n = 0;
    for_each_monomial(nv, w, d, [&](const Exps&) { ++n; });
    return n;
}

} // namespace agkit

#endif
