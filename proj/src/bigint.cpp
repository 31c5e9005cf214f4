// bigint.cpp

#include "otlab/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace otlab {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoids UB on LLONG_MIN
    std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    limbs_.push_back(static_cast<std::uint32_t>(m));
    if (m >> 32) limbs_.push_back(static_cast<std::uint32_t>(m >> 32));
}

BigInt::BigInt(unsigned long long v) {
    if (v == 0) return;
    sign_ = 1;
    limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

bool BigInt::is_one() const {
    return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1;
}

bool BigInt::is_pow2() const {
    if (sign_ == 0) return false;
    for (std::size_t i = 0; i + 1 < limbs_.size(); ++i)
        if (limbs_[i] != 0) return false;
    return std::has_single_bit(limbs_.back());
}

BigInt BigInt::pow2(unsigned bits) {
    BigInt r;
    r.sign_ = 1;
    r.limbs_.assign(bits / 32 + 1, 0);
    r.limbs_.back() = 1u << (bits % 32);
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void BigInt::add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    std::uint64_t carry = 0;
    std::size_t i = 0;
    for (; i < b.size(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(a[i]) + b[i] + carry;
        a[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    for (; carry && i < a.size(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(a[i]) + carry;
        a[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) a.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < b.size() || borrow; ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = d < 0;
        if (d < 0) d += static_cast<std::int64_t>(kBase);
        a[i] = static_cast<std::uint32_t>(d);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        add_mag(limbs_, o.limbs_);
        return *this;
    }
    int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0) {
        limbs_.clear();
        sign_ = 0;
    } else if (c > 0) {
        sub_mag(limbs_, o.limbs_);
    } else {
        std::vector<std::uint32_t> tmp = o.limbs_;
        sub_mag(tmp, limbs_);
        limbs_ = std::move(tmp);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    BigInt neg = o;
    neg.sign_ = -neg.sign_;
    return *this += neg;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;  // skips power-of-two style sparsity
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k++] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
    return r;
}

BigInt& BigInt::operator*=(const BigInt& o) { return *this = *this * o; }

BigInt BigInt::mul_small(std::uint32_t f) const {
    BigInt r;
    if (sign_ == 0 || f == 0) return r;
    r.sign_ = sign_;
    r.limbs_.resize(limbs_.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * f + carry;
        r.limbs_[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::uint32_t BigInt::divmod_small_inplace(std::uint32_t d) {
    if (d == 0) throw std::domain_error("BigInt: division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

void BigInt::shl_mag(std::vector<std::uint32_t>& a, unsigned bits) {
    if (a.empty() || bits == 0) return;
    unsigned words = bits / 32, rem = bits % 32;
    if (rem) {
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint32_t nc = a[i] >> (32 - rem);
            a[i] = (a[i] << rem) | carry;
            carry = nc;
        }
        if (carry) a.push_back(carry);
    }
    a.insert(a.begin(), words, 0);
}

void BigInt::shr_mag(std::vector<std::uint32_t>& a, unsigned bits) {
    unsigned words = bits / 32, rem = bits % 32;
    if (words >= a.size()) {
        a.clear();
        return;
    }
    a.erase(a.begin(), a.begin() + words);
    if (rem) {
        for (std::size_t i = 0; i + 1 < a.size(); ++i)
            a[i] = (a[i] >> rem) | (a[i + 1] << (32 - rem));
        a.back() >>= rem;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt BigInt::operator<<(unsigned bits) const {
    BigInt r = *this;
    shl_mag(r.limbs_, bits);
    r.trim();
    return r;
}

BigInt BigInt::operator>>(unsigned bits) const {
    BigInt r = *this;
    shr_mag(r.limbs_, bits);
    r.trim();
    return r;
}

// Knuth TAOCP vol. 2, algorithm D, on magnitudes.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(u, v) < 0) {
        r = u;
        return;
    }
    if (v.size() == 1) {
        q = u;
        std::uint64_t rem = 0;
        for (std::size_t i = q.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | q[i];
            q[i] = static_cast<std::uint32_t>(cur / v[0]);
            rem = cur % v[0];
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    unsigned shift = 31 - (std::bit_width(v.back()) - 1);
    std::vector<std::uint32_t> vn = v;
    std::vector<std::uint32_t> un = u;
    shl_mag(vn, shift);
    shl_mag(un, shift);
    un.push_back(0);  // extra headroom limb

    const std::size_t n = vn.size();
    const std::size_t m = un.size() - n - 1;
    q.assign(m + 1, 0);
    const std::uint64_t vtop = vn[n - 1];
    const std::uint64_t vsec = vn[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vtop;
        std::uint64_t rhat = num % vtop;
        while (qhat >= kBase || qhat * vsec > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kBase) break;
        }
        // multiply-subtract qhat * vn from un[j .. j+n]
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow -
                             static_cast<std::int64_t>(p & 0xffffffffull);
            borrow = t < 0;
            if (t < 0) t += static_cast<std::int64_t>(kBase);
            un[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow -
                         static_cast<std::int64_t>(carry);
        borrow = t < 0;
        if (t < 0) t += static_cast<std::int64_t>(kBase);
        un[j + n] = static_cast<std::uint32_t>(t);

        if (borrow) {  // qhat was one too large
            --qhat;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c;
                un[i + j] = static_cast<std::uint32_t>(s);
                c = s >> 32;
            }
            un[j + n] = static_cast<std::uint32_t>(un[j + n] + c);
        }
        q[j] = static_cast<std::uint32_t>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    un.resize(n);
    shr_mag(un, shift);
    r = std::move(un);
    while (!r.empty() && r.back() == 0) r.pop_back();
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    BigInt q, r;
    if (a.sign_ == 0) return {q, r};
    divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    return {q, r};
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_mag(limbs_, o.limbs_);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

bool BigInt::operator==(const BigInt& o) const {
    return sign_ == o.sign_ && limbs_ == o.limbs_;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.sign_ == 0 ? 0 : 1;
    b.sign_ = b.sign_ == 0 ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::size_t az = a.trailing_zero_bits(), bz = b.trailing_zero_bits();
    std::size_t common = std::min(az, bz);
    shr_mag(a.limbs_, static_cast<unsigned>(az));
    shr_mag(b.limbs_, static_cast<unsigned>(bz));
    auto strip = [](std::vector<std::uint32_t>& v) {
        std::size_t z = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) {
                z += 32;
            } else {
                z += std::countr_zero(v[i]);
                break;
            }
        }
        shr_mag(v, static_cast<unsigned>(z));
    };
    // both odd here; subtract when close in size, reduce modulo when far
    // apart (pure binary subtraction is linear in the bit-length gap)
    while (true) {
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) break;
        if (c < 0) a.limbs_.swap(b.limbs_);
        if (a.bit_length() > b.bit_length() + 32) {
            std::vector<std::uint32_t> q, r;
            divmod_mag(a.limbs_, b.limbs_, q, r);
            if (r.empty()) {
                a.limbs_ = b.limbs_;
                break;
            }
            a.limbs_ = std::move(r);
        } else {
            sub_mag(a.limbs_, b.limbs_);
        }
        strip(a.limbs_);
    }
    shl_mag(a.limbs_, static_cast<unsigned>(common));
    a.trim();
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    return a;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * 32 + std::bit_width(limbs_.back());
}

std::size_t BigInt::trailing_zero_bits() const {
    if (limbs_.empty()) return 0;
    std::size_t z = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if (limbs_[i] == 0) {
            z += 32;
        } else {
            z += std::countr_zero(limbs_[i]);
            break;
        }
    }
    return z;
}

bool BigInt::fits_int64() const {
    if (bit_length() < 64) return true;
    // INT64_MIN special case
    return sign_ < 0 && bit_length() == 64 && trailing_zero_bits() == 63;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in int64");
    std::uint64_t m = limbs_.empty() ? 0 : limbs_[0];
    if (limbs_.size() > 1) m |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return sign_ < 0 ? -static_cast<std::int64_t>(m - 1) - 1 : static_cast<std::int64_t>(m);
}

double BigInt::to_double() const {
    if (sign_ == 0) return 0.0;
    std::size_t bits = bit_length();
    if (bits <= 63) {
        std::uint64_t m = limbs_[0];
        if (limbs_.size() > 1) m |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        return sign_ * static_cast<double>(m);
    }
    // top 64 bits as mantissa, rest as exponent
    BigInt top = *this >> static_cast<unsigned>(bits - 64);
    std::uint64_t m = top.limbs_[0] | (static_cast<std::uint64_t>(top.limbs_[1]) << 32);
    return sign_ * std::ldexp(static_cast<double>(m), static_cast<int>(bits) - 64);
}

BigInt BigInt::from_string(std::string_view dec) {
    BigInt r;
    bool neg = false;
    std::size_t i = 0;
    if (i < dec.size() && (dec[i] == '-' || dec[i] == '+')) {
        neg = dec[i] == '-';
        ++i;
    }
    if (i == dec.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < dec.size(); ++i) {
        char c = dec[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in numeral");
        r = r.mul_small(10);
        if (c != '0') {
            BigInt d(static_cast<long long>(c - '0'));
            if (r.sign_ == 0) {
                r = d;
            } else {
                add_mag(r.limbs_, d.limbs_);
            }
            r.sign_ = 1;
        }
    }
    if (neg && r.sign_ != 0) r.sign_ = -1;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    BigInt t = abs();
    std::string out;
    while (!t.is_zero()) {
        std::uint32_t chunk = t.divmod_small_inplace(1000000000u);
        if (t.is_zero()) {
            out = std::to_string(chunk) + out;
        } else {
            char buf[16];
            std::snprintf(buf, sizeof buf, "%09u", chunk);
            out = buf + out;
        }
    }
    return sign_ < 0 ? "-" + out : out;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt{};
    BigInt g = BigInt::gcd(a, b);
    return (a.abs() / g) * b.abs();
}

}  // namespace otlab
