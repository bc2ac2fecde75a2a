#ifndef AGKIT_QSERIES_HPP
#define AGKIT_QSERIES_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "agkit/rat.hpp"

namespace agkit {

// Truncated power/Laurent series: coefficients are known exactly for
// exponents in [min_deg, trunc); everything below min_deg is exactly zero.
struct QSeries {
    int min_deg = 0;
    int trunc = 0;
    std::vector<Rat> c; // size trunc - min_deg

    QSeries() = default;
    QSeries(int min_d, int trunc_at, std::vector<Rat> coeffs)
        : min_deg(min_d), trunc(trunc_at), c(std::move(coeffs)) {
        if (static_cast<int>(c.size()) != trunc - min_deg)
            throw error("QSeries: coefficient count mismatch");
    }

    static QSeries zero(int trunc_at) { return QSeries(0, trunc_at, std::vector<Rat>(trunc_at)); }
    static QSeries one(int trunc_at) {
        QSeries s = zero(trunc_at);
        if (trunc_at > 0) s.c[0] = 1;
        return s;
    }

    Rat coeff(int d) const {
        if (d < min_deg) return 0;
        if (d >= trunc) throw error("QSeries: coefficient beyond truncation order");
        return c[d - min_deg];
    }

    // lowest exponent with a nonzero coefficient; trunc if none
    int valuation() const {
        for (int d = min_deg; d < trunc; ++d)
            if (c[d - min_deg] != 0) return d;
        return trunc;
    }

    QSeries truncated(int new_trunc) const {
        if (new_trunc > trunc) throw error("QSeries: cannot extend truncation");
        if (new_trunc <= min_deg) return QSeries(new_trunc, new_trunc, {});
        return QSeries(min_deg, new_trunc,
                       std::vector<Rat>(c.begin(), c.begin() + (new_trunc - min_deg)));
    }

    QSeries operator+(const QSeries& o) const {
        int md = std::min(min_deg, o.min_deg);
        int tr = std::min(trunc, o.trunc);
        if (tr < md) md = tr;
        std::vector<Rat> out(tr - md);
        for (int d = md; d < tr; ++d) out[d - md] = coeff(d) + o.coeff(d);
        return QSeries(md, tr, std::move(out));
    }
    QSeries operator-(const QSeries& o) const { return *this + (o * Rat(-1)); }
    QSeries operator*(const Rat& k) const {
        QSeries out = *this;
        for (auto& x : out.c) x *= k;
        return out;
    }
    QSeries operator*(const QSeries& o) const {
        // coefficient of q^d is exact for d < min(trunc + o.min_deg, o.trunc + min_deg)
        int md = min_deg + o.min_deg;
        int tr = std::min(trunc + o.min_deg, o.trunc + min_deg);
        if (tr < md) tr = md;
        std::vector<Rat> out(tr - md);
        for (int i = min_deg; i < trunc; ++i) {
            if (coeff(i) == 0) continue;
            for (int j = o.min_deg; j < o.trunc; ++j) {
                int d = i + j;
                if (d >= tr) break;
                out[d - md] += coeff(i) * o.coeff(j);
            }
        }
        return QSeries(md, tr, std::move(out));
    }

    // division by a series with nonzero valuation coefficient
    QSeries operator/(const QSeries& o) const {
        int v = o.valuation();
        if (v == o.trunc) throw error("QSeries: division by zero series");
        // pull the factor q^v out of the denominator
        int dn = o.trunc - v;
        std::vector<Rat> den(o.c.begin() + (v - o.min_deg), o.c.end());
        int md = min_deg - v;
        int tr = std::min(trunc, min_deg + dn) - v;
        // quotient coefficients by long division: num = q * den
        int n = tr - md;
        std::vector<Rat> out(n);
        for (int k = 0; k < n; ++k) {
            Rat acc = coeff(md + v + k);
            for (int j = 1; j <= k && j < dn; ++j) acc -= den[j] * out[k - j];
            out[k] = acc / den[0];
        }
        return QSeries(md, tr, std::move(out));
    }

    bool operator==(const QSeries& o) const {
        int md = std::min(min_deg, o.min_deg);
        int tr = std::min(trunc, o.trunc);
        for (int d = md; d < tr; ++d)
            if (coeff(d) != o.coeff(d)) return false;
        return true;
    }

    std::string str(const std::string& var = "t") const {
        std::ostringstream os;
        bool first = true;
        for (int d = min_deg; d < trunc; ++d) {
            Rat a = coeff(d);
            if (a == 0) continue;
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            first = false;
            Rat m = a < 0 ? Rat(-a) : a;
            if (m != 1 || d == 0) os << m.str();
            if (d != 0) {
                if (m != 1) os << "*";
                os << var;
                if (d != 1) os << "^" << d;
            }
        }
        if (first) os << "0";
        os << " + O(" << var << "^" << trunc << ")";
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Dense univariate polynomial helpers (coefficient vectors, index = exponent).

using UPoly = std::vector<Rat>;

inline void upoly_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    upoly_trim(out);
    return out;
}

inline UPoly upoly_add(const UPoly& a, const UPoly& b) {
    UPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    upoly_trim(out);
    return out;
}

inline Rat upoly_eval(const UPoly& p, const Rat& x) {
    Rat out = 0;
    for (size_t i = p.size(); i-- > 0;) out = out * x + p[i];
    return out;
}

// exact division, throws if not divisible
inline UPoly upoly_div(const UPoly& a, const UPoly& b) {
    UPoly num = a, out;
    upoly_trim(num);
    UPoly den = b;
    upoly_trim(den);
    if (den.empty()) throw error("upoly_div: division by zero");
    if (num.empty()) return {};
    if (num.size() < den.size()) throw error("upoly_div: not divisible");
    out.assign(num.size() - den.size() + 1, Rat(0));
    for (size_t k = out.size(); k-- > 0;) {
        Rat q = num[k + den.size() - 1] / den.back();
        out[k] = q;
        for (size_t j = 0; j < den.size(); ++j) num[k + j] -= q * den[j];
    }
    upoly_trim(num);
    if (!num.empty()) throw error("upoly_div: nonzero remainder");
    return out;
}

inline std::string upoly_str(const UPoly& p, const std::string& var = "t") {
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < p.size(); ++d) {
        if (p[d] == 0) continue;
        Rat m = p[d] < 0 ? Rat(-p[d]) : p[d];
        if (!first) os << (p[d] < 0 ? " - " : " + ");
        else if (p[d] < 0) os << "-";
        first = false;
        if (m != 1 || d == 0) os << m.str();
        if (d != 0) {
            if (m != 1) os << "*";
            os << var;
            if (d != 1) os << "^" << d;
        }
    }
    if (first) os << "0";
    return os.str();
}

// Rational function g(t) / (1-t)^k, reduced so that g(1) != 0 (zero numerator
// is the canonical zero with k = 0).
struct RatFunc {
    UPoly num;
    int denom_pow = 0;

    RatFunc() = default;
    RatFunc(UPoly numerator, int k) : num(std::move(numerator)), denom_pow(k) { reduce(); }

    void reduce() {
        upoly_trim(num);
        if (num.empty()) { denom_pow = 0; return; }
        static const UPoly one_minus_t = {Rat(1), Rat(-1)};
        while (denom_pow > 0 && upoly_eval(num, 1) == 0) {
            num = upoly_div(num, one_minus_t);
            --denom_pow;
        }
    }

    // expand to a power series with the given truncation order
    QSeries expand(int trunc_at) const {
        QSeries n(0, trunc_at, std::vector<Rat>(trunc_at));
        for (size_t i = 0; i < num.size() && static_cast<int>(i) < trunc_at; ++i)
            n.c[i] = num[i];
        // 1/(1-t)^k has coefficients binomial(d+k-1, k-1)
        QSeries d(0, trunc_at, std::vector<Rat>(trunc_at));
        for (int j = 0; j < trunc_at; ++j)
            d.c[j] = Rat(binomial(j + denom_pow - 1, denom_pow - 1));
        if (denom_pow == 0) { d = QSeries::one(trunc_at); }
        return n * d;
    }

    bool operator==(const RatFunc& o) const {
        return num == o.num && denom_pow == o.denom_pow;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(" << upoly_str(num) << ")";
        if (denom_pow > 0) os << "/(1-t)^" << denom_pow;
        return os.str();
    }
};

} // namespace agkit

#endif
