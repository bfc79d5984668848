#pragma once

#include <compare>
#include <string>

#include "msp/rational.hpp"

namespace msp {

// A rational extended with -inf / +inf. Addition lets infinities absorb;
// adding -inf to +inf is a domain error (never arises in packing-only or
// covering-only evaluation).
class ExtVal {
public:
    ExtVal() : kind_(Kind::Finite), value_(0) {}
    ExtVal(Rat v) : kind_(Kind::Finite), value_(std::move(v)) {}
    ExtVal(long v) : kind_(Kind::Finite), value_(rat(v)) {}

    static ExtVal neg_inf() { return ExtVal(Kind::NegInf); }
    static ExtVal pos_inf() { return ExtVal(Kind::PosInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }

    const Rat& value() const {
        if (!is_finite()) throw DomainError("value() on infinite ExtVal");
        return value_;
    }

    ExtVal operator+(const ExtVal& o) const {
        if (is_finite() && o.is_finite()) return ExtVal(value_ + o.value_);
        if (is_neg_inf() || o.is_neg_inf()) {
            if (is_pos_inf() || o.is_pos_inf())
                throw DomainError("-inf + +inf");
            return neg_inf();
        }
        return pos_inf();
    }
    ExtVal& operator+=(const ExtVal& o) { return *this = *this + o; }

    friend bool operator==(const ExtVal& a, const ExtVal& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }
    friend bool operator<(const ExtVal& a, const ExtVal& b) {
        if (a.kind_ == b.kind_)
            return a.kind_ == Kind::Finite && a.value_ < b.value_;
        if (a.is_neg_inf() || b.is_pos_inf()) return true;
        return false;
    }
    friend bool operator>(const ExtVal& a, const ExtVal& b) { return b < a; }
    friend bool operator<=(const ExtVal& a, const ExtVal& b) { return !(b < a); }
    friend bool operator>=(const ExtVal& a, const ExtVal& b) { return !(a < b); }
    friend bool operator!=(const ExtVal& a, const ExtVal& b) { return !(a == b); }

    std::string str() const {
        if (is_neg_inf()) return "-inf";
        if (is_pos_inf()) return "inf";
        return rat_str(value_);
    }

private:
    enum class Kind { NegInf, Finite, PosInf };
    explicit ExtVal(Kind k) : kind_(k), value_(0) {}

    Kind kind_;
    Rat value_;
};

inline ExtVal max(const ExtVal& a, const ExtVal& b) { return a < b ? b : a; }
inline ExtVal min(const ExtVal& a, const ExtVal& b) { return b < a ? b : a; }

} // namespace msp
