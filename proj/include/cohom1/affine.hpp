#pragma once

#include <map>
#include <string>
#include <vector>

#include "cohom1/rational.hpp"

namespace cohom1 {

// Registry mapping undetermined coefficients to small integer ids.
class UnknownTable {
public:
    int add(const std::string& name) {
        names_.push_back(name);
        return static_cast<int>(names_.size()) - 1;
    }
    const std::string& name(int id) const { return names_.at(id); }
    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
};

// An expression c + sum_i a_i u_i, affine in the unknowns u_i.  Products
// of two non-constant expressions throw AffineOverflow; every quantity the
// solver extracts is affine in the current batch of unknowns, so hitting
// the overflow indicates a bookkeeping bug upstream.
class AffineScalar {
public:
    AffineScalar() : c_(0) {}
    AffineScalar(const Rational& c) : c_(c) {}  // NOLINT(runtime/explicit)
    AffineScalar(long c) : c_(c) {}             // NOLINT(runtime/explicit)
    static AffineScalar unknown(int id, const Rational& coeff = Rational(1)) {
        AffineScalar a;
        if (coeff != 0) a.lin_[id] = coeff;
        return a;
    }

    const Rational& constant() const { return c_; }
    const std::map<int, Rational>& linear() const { return lin_; }
    bool is_constant() const { return lin_.empty(); }
    bool is_zero() const { return c_ == 0 && lin_.empty(); }
    Rational coeff(int id) const {
        auto it = lin_.find(id);
        return it == lin_.end() ? Rational(0) : it->second;
    }

    AffineScalar& operator+=(const AffineScalar& o) {
        c_ += o.c_;
        for (const auto& [id, v] : o.lin_) add_lin(id, v);
        return *this;
    }
    AffineScalar& operator-=(const AffineScalar& o) {
        c_ -= o.c_;
        for (const auto& [id, v] : o.lin_) add_lin(id, -v);
        return *this;
    }
    friend AffineScalar operator+(AffineScalar a, const AffineScalar& b) { return a += b; }
    friend AffineScalar operator-(AffineScalar a, const AffineScalar& b) { return a -= b; }
    friend AffineScalar operator-(const AffineScalar& a) {
        AffineScalar r;
        r.c_ = -a.c_;
        for (const auto& [id, v] : a.lin_) r.lin_[id] = -v;
        return r;
    }
    friend AffineScalar operator*(const AffineScalar& a, const AffineScalar& b) {
        if (!a.lin_.empty() && !b.lin_.empty())
            throw AffineOverflow("product of two unknown-dependent scalars");
        const AffineScalar& lin = a.lin_.empty() ? b : a;
        const Rational& k = a.lin_.empty() ? a.c_ : b.c_;
        AffineScalar r;
        if (k == 0) return r;
        r.c_ = lin.c_ * k;
        for (const auto& [id, v] : lin.lin_) r.lin_[id] = v * k;
        return r;
    }
    AffineScalar& operator*=(const AffineScalar& o) { return *this = *this * o; }

    friend AffineScalar operator/(const AffineScalar& a, const Rational& k) {
        AffineScalar r;
        r.c_ = a.c_ / k;
        for (const auto& [id, v] : a.lin_) r.lin_[id] = v / k;
        return r;
    }

    bool operator==(const AffineScalar& o) const { return c_ == o.c_ && lin_ == o.lin_; }
    bool operator!=(const AffineScalar& o) const { return !(*this == o); }

    // Replaces unknown `id` by the given (affine) value.
    void substitute(int id, const AffineScalar& value) {
        auto it = lin_.find(id);
        if (it == lin_.end()) return;
        Rational k = it->second;
        lin_.erase(it);
        c_ += k * value.c_;
        for (const auto& [jd, v] : value.lin_) add_lin(jd, k * v);
    }

    std::string str(const UnknownTable* tab = nullptr) const {
        std::string s = to_string(c_);
        for (const auto& [id, v] : lin_) {
            s += (v < 0 ? " - " : " + ");
            Rational av = abs(v);
            if (av != 1) s += to_string(av) + "*";
            s += tab ? tab->name(id) : "u" + std::to_string(id);
        }
        return s;
    }

private:
    void add_lin(int id, const Rational& v) {
        auto [it, fresh] = lin_.try_emplace(id, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) lin_.erase(it);
        }
    }

    Rational c_;
    std::map<int, Rational> lin_;
};

}  // namespace cohom1
