#include "gamma3/scalar.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "gamma3/errors.hpp"

namespace gamma3 {

namespace {

BigInt pow3_big(int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= 3;
    return r;
}

}  // namespace

void TriadicHalf::normalize() {
    if (num_ == 0) {
        pow3_ = 0;
        half_ = false;
        return;
    }
    while (pow3_ > 0 && num_ % 3 == 0) {
        num_ /= 3;
        --pow3_;
    }
    if (half_ && num_ % 2 == 0) {
        num_ /= 2;
        half_ = false;
    }
}

TriadicHalf TriadicHalf::make(BigInt num, int pow3, bool half) {
    if (pow3 < 0) throw std::domain_error("TriadicHalf: negative power of 3");
    TriadicHalf r;
    r.num_ = std::move(num);
    r.pow3_ = pow3;
    r.half_ = half;
    r.normalize();
    return r;
}

TriadicHalf TriadicHalf::operator-() const {
    TriadicHalf r = *this;
    r.num_ = -r.num_;
    return r;
}

TriadicHalf operator+(const TriadicHalf& x, const TriadicHalf& y) {
    const int b = std::max(x.pow3_, y.pow3_);
    const bool h = x.half_ || y.half_;
    BigInt nx = x.num_ * pow3_big(b - x.pow3_);
    if (h && !x.half_) nx *= 2;
    BigInt ny = y.num_ * pow3_big(b - y.pow3_);
    if (h && !y.half_) ny *= 2;
    return TriadicHalf::make(nx + ny, b, h);
}

TriadicHalf operator-(const TriadicHalf& x, const TriadicHalf& y) { return x + (-y); }

TriadicHalf operator*(const TriadicHalf& x, const TriadicHalf& y) {
    if (x.half_ && y.half_)
        throw std::domain_error("TriadicHalf: product would need denominator 4");
    return TriadicHalf::make(x.num_ * y.num_, x.pow3_ + y.pow3_, x.half_ || y.half_);
}

TriadicHalf TriadicHalf::times(const BigInt& k) const {
    return make(num_ * k, pow3_, half_);
}

TriadicHalf TriadicHalf::scale3(int k) const {
    if (k >= 0) {
        const int cancel = std::min(k, pow3_);
        return make(num_ * pow3_big(k - cancel), pow3_ - cancel, half_);
    }
    return make(num_, pow3_ - k, half_);
}

TriadicHalf TriadicHalf::halved() const {
    if (half_) throw std::domain_error("TriadicHalf: halving would need denominator 4");
    return make(num_, pow3_, true);
}

BigInt TriadicHalf::floor() const {
    BigInt den = pow3_big(pow3_);
    if (half_) den *= 2;
    if (num_ >= 0) return num_ / den;
    return -((-num_ + den - 1) / den);
}

TriadicHalf TriadicHalf::mod1() const { return *this - TriadicHalf(floor()); }

double TriadicHalf::to_double() const {
    double v = num_.convert_to<double>();
    if (pow3_ > 0) v /= pow3_big(pow3_).convert_to<double>();
    if (half_) v *= 0.5;
    return v;
}

std::string TriadicHalf::str() const {
    std::string n = num_.str();
    if (pow3_ == 0 && !half_) return n;
    if (pow3_ == 0) return n + "/2";
    std::string p3 = pow3_ == 1 ? "3" : "3^" + std::to_string(pow3_);
    if (!half_) return n + "/" + p3;
    return n + "/(2*" + p3 + ")";
}

namespace {

bool digits(std::string_view t, std::size_t* pos, BigInt* out) {
    std::size_t i = *pos;
    if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    BigInt v = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        v = v * 10 + (t[i] - '0');
        ++i;
    }
    *pos = i;
    *out = v;
    return true;
}

// `3` or `3^b`
int parse_pow3(std::string_view t, std::size_t* pos) {
    if (*pos >= t.size() || t[*pos] != '3') throw ParseError("expected 3", *pos);
    ++*pos;
    if (*pos < t.size() && t[*pos] == '^') {
        ++*pos;
        BigInt b;
        if (!digits(t, pos, &b) || b < 0 || b > 100000)
            throw ParseError("expected exponent after ^", *pos);
        return b.convert_to<int>();
    }
    return 1;
}

}  // namespace

TriadicHalf TriadicHalf::parse(std::string_view text, std::size_t* pos) {
    std::size_t i = *pos;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    BigInt n;
    if (!digits(text, &i, &n)) throw ParseError("expected integer", i);
    if (neg) n = -n;
    int b = 0;
    bool h = false;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (i >= text.size()) throw ParseError("expected denominator", i);
        if (text[i] == '2') {
            ++i;
            h = true;
        } else if (text[i] == '3') {
            b = parse_pow3(text, &i);
        } else if (text[i] == '(') {
            ++i;
            if (i >= text.size() || text[i] != '2') throw ParseError("expected 2", i);
            ++i;
            if (i >= text.size() || text[i] != '*') throw ParseError("expected *", i);
            ++i;
            b = parse_pow3(text, &i);
            if (i >= text.size() || text[i] != ')') throw ParseError("expected )", i);
            ++i;
            h = true;
        } else {
            throw ParseError("expected 2, 3 or (2*3^b)", i);
        }
    }
    *pos = i;
    return make(n, b, h);
}

TriadicHalf TriadicHalf::parse(std::string_view text) {
    std::size_t pos = 0;
    TriadicHalf v = parse(text, &pos);
    if (pos != text.size()) throw ParseError("trailing characters after scalar", pos);
    return v;
}

IMat2 IMat2::mul(const IMat2& o) const {
    return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
             m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
}

IMat2 IMat2::inverse() const {
    const long long d = det();
    if (d != 1 && d != -1) throw std::domain_error("IMat2: determinant must be +-1");
    return {{m[3] / d, -m[1] / d, -m[2] / d, m[0] / d}};
}

LatticeVector apply(const IMat2& m, const LatticeVector& v) {
    return {v.a.times(m.m[0]) + v.b.times(m.m[1]), v.a.times(m.m[2]) + v.b.times(m.m[3])};
}

}  // namespace gamma3
