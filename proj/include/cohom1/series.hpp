#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cohom1/affine.hpp"

namespace cohom1 {

// Truncated Laurent series sum_e a_e t^e with affine coefficients and
// explicit validity bookkeeping: coefficients are known exactly for all
// exponents <= hi(); exponents above hi() are undetermined.  hi() ==
// kExact marks an exact polynomial.  The low side is always fully known
// (coefficients below the stored range are exactly zero).
class TruncatedSeries {
public:
    static constexpr int kExact = 1 << 20;

    TruncatedSeries() = default;
    TruncatedSeries(const AffineScalar& c) {  // NOLINT(runtime/explicit)
        if (!c.is_zero()) {
            lo_ = 0;
            coeffs_ = {c};
        }
    }
    TruncatedSeries(const Rational& c) : TruncatedSeries(AffineScalar(c)) {}
    TruncatedSeries(long c) : TruncatedSeries(AffineScalar(c)) {}

    static TruncatedSeries monomial(int e, const AffineScalar& c) {
        TruncatedSeries s;
        if (!c.is_zero()) {
            s.lo_ = e;
            s.coeffs_ = {c};
        }
        return s;
    }

    // Builds sum_m c[m] t^(e0 + step*m).
    static TruncatedSeries spaced(int e0, int step, const std::vector<AffineScalar>& c) {
        TruncatedSeries s;
        for (size_t m = 0; m < c.size(); ++m)
            s.set_coeff(e0 + step * static_cast<int>(m), c[m]);
        return s;
    }

    int hi() const { return hi_; }
    bool exact() const { return hi_ == kExact; }
    bool known_zero() const { return coeffs_.empty() && exact(); }

    // Valuation: smallest exponent with nonzero coefficient (kExact if none
    // stored).
    int ord() const {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return lo_ + static_cast<int>(i);
        return kExact;
    }
    int max_deg() const {
        for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
            if (!coeffs_[i].is_zero()) return lo_ + i;
        return -kExact;
    }

    AffineScalar coeff(int e) const {
        if (e > hi_)
            throw Error("coefficient of t^" + std::to_string(e) +
                        " requested beyond validity order " + std::to_string(hi_));
        int i = e - lo_;
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return AffineScalar();
        return coeffs_[i];
    }

    void set_coeff(int e, const AffineScalar& c) {
        if (coeffs_.empty()) {
            if (c.is_zero()) return;
            lo_ = e;
            coeffs_ = {c};
            return;
        }
        if (e < lo_) {
            coeffs_.insert(coeffs_.begin(), lo_ - e, AffineScalar());
            lo_ = e;
        } else if (e >= lo_ + static_cast<int>(coeffs_.size())) {
            coeffs_.resize(e - lo_ + 1);
        }
        coeffs_[e - lo_] = c;
    }

    // Marks coefficients above `new_hi` as undetermined and drops them.
    TruncatedSeries truncated(int new_hi) const {
        TruncatedSeries r = *this;
        if (new_hi >= r.hi_) return r;
        r.hi_ = new_hi;
        int keep = new_hi - r.lo_ + 1;
        if (keep < 0) keep = 0;
        if (keep < static_cast<int>(r.coeffs_.size())) r.coeffs_.resize(keep);
        r.trim();
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r;
        r.hi_ = std::min(a.hi_, b.hi_);
        for (const TruncatedSeries* s : {&a, &b})
            for (size_t i = 0; i < s->coeffs_.size(); ++i) {
                int e = s->lo_ + static_cast<int>(i);
                if (e > r.hi_ || s->coeffs_[i].is_zero()) continue;
                r.set_coeff(e, r.coeff(e) + s->coeffs_[i]);
            }
        r.trim();
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a) {
        TruncatedSeries r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        long ha = bound(a.ord(), b.hi_), hb = bound(b.ord(), a.hi_);
        long h = std::min(std::min(ha, hb), static_cast<long>(kExact));
        TruncatedSeries r;
        r.hi_ = static_cast<int>(h);
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            int ea = a.lo_ + static_cast<int>(i);
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                int e = ea + b.lo_ + static_cast<int>(j);
                if (e > r.hi_) continue;
                r.set_coeff(e, r.coeff(e) + a.coeffs_[i] * b.coeffs_[j]);
            }
        }
        r.trim();
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend TruncatedSeries operator*(const AffineScalar& k, const TruncatedSeries& a) {
        TruncatedSeries r;
        r.hi_ = a.hi_;
        r.lo_ = a.lo_;
        r.coeffs_.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) r.coeffs_.push_back(k * c);
        r.trim();
        return r;
    }

    // Multiplies by t^k.
    TruncatedSeries shifted(int k) const {
        TruncatedSeries r = *this;
        r.lo_ += k;
        if (r.hi_ != kExact) r.hi_ += k;
        return r;
    }

    // d/dt.
    TruncatedSeries derivative() const {
        TruncatedSeries r;
        r.hi_ = hi_ == kExact ? kExact : hi_ - 1;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            int e = lo_ + static_cast<int>(i);
            if (e == 0 || coeffs_[i].is_zero()) continue;
            r.set_coeff(e - 1, AffineScalar(Rational(e)) * coeffs_[i]);
        }
        r.trim();
        return r;
    }

    // Multiplicative inverse, valid through absolute order
    // min(hi - 2 ord, max_abs_order).  The leading coefficient must be a
    // nonzero constant.
    TruncatedSeries inverse(int max_abs_order) const {
        int v = ord();
        if (v == kExact) throw NotInvertible("inverse of zero series");
        AffineScalar lead = coeff(v);
        if (!lead.is_constant())
            throw NotInvertible("leading series coefficient depends on unknowns");
        long rh = std::min(bound(-2 * v, hi_), static_cast<long>(max_abs_order));
        int rel = static_cast<int>(std::min(rh + v, static_cast<long>(kExact)));
        // u = f / (c t^v) - 1 has valuation >= 1
        TruncatedSeries u = (AffineScalar(Rational(1) / lead.constant()) * shifted(-v) -
                             TruncatedSeries(1))
                                .truncated(rel < kExact ? rel : kExact);
        TruncatedSeries acc(1), term(1);
        int cap = rel < kExact ? rel : kExact;
        for (int j = 1; j <= rel && !term.known_zero(); ++j) {
            // bound the factor so the product never forms a coefficient
            // beyond the requested order
            int room = cap < kExact ? cap - std::max(term.ord(), 0) : kExact;
            if (room < u.ord()) break;
            term = (term * (-u).truncated(room)).truncated(cap);
            if (term.ord() > rel) break;
            acc += term;
        }
        TruncatedSeries r = AffineScalar(Rational(1) / lead.constant()) * acc.shifted(-v);
        return r.truncated(static_cast<int>(std::min(rh, static_cast<long>(kExact))));
    }

    bool is_even() const {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (((lo_ + static_cast<int>(i)) % 2 + 2) % 2 == 1 && !coeffs_[i].is_zero())
                return false;
        return true;
    }
    bool is_odd() const {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if ((lo_ + static_cast<int>(i)) % 2 == 0 && !coeffs_[i].is_zero()) return false;
        return true;
    }

    void substitute(int id, const AffineScalar& value) {
        for (auto& c : coeffs_) c.substitute(id, value);
    }

    // Evaluates the stored coefficients as a polynomial at t; validity
    // bookkeeping is deliberately ignored (truncation evaluation).
    AffineScalar eval_poly(const Rational& t) const {
        AffineScalar acc;
        Rational tp = 1;
        int prev = lo_;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            int e = lo_ + static_cast<int>(i);
            for (; prev < e; ++prev) tp *= t;
            acc += AffineScalar(tp) * coeffs_[i];
        }
        if (lo_ < 0) {
            Rational tn = 1;
            for (int k = 0; k < -lo_; ++k) tn *= t;
            acc = acc / tn;
        }
        return acc;
    }

    bool identically_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    std::string str(const UnknownTable* tab = nullptr) const {
        std::string s;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            int e = lo_ + static_cast<int>(i);
            if (!s.empty()) s += " + ";
            s += "(" + coeffs_[i].str(tab) + ")";
            if (e != 0) s += "*t^" + std::to_string(e);
        }
        if (s.empty()) s = "0";
        if (hi_ != kExact) s += " + O(t^" + std::to_string(hi_ + 1) + ")";
        return s;
    }

private:
    static long bound(int v, int h) {
        // valuation + validity with saturation at kExact
        if (v >= kExact || h >= kExact) return 2L * kExact;
        return static_cast<long>(v) + h;
    }

    void trim() {
        size_t b = 0;
        while (b < coeffs_.size() && coeffs_[b].is_zero()) ++b;
        if (b > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(b));
            lo_ += static_cast<int>(b);
        }
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (coeffs_.empty()) lo_ = 0;
    }

    int lo_ = 0;
    int hi_ = kExact;
    std::vector<AffineScalar> coeffs_;
};

}  // namespace cohom1
