#include "sgca/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sgca {

namespace {

constexpr unsigned kWordBits = 64;
// Safety cap for non-modular pow(); everything this library computes stays
// far below it, so hitting the cap means a usage error, not a capacity issue.
constexpr std::uint64_t kMaxDegree = 1u << 20;

std::string bad_token(std::string_view token) {
    return "bad polynomial token: '" + std::string(token) + "'";
}

} // namespace

BitPoly BitPoly::monomial(unsigned k) {
    BitPoly p;
    p.words_.assign(k / kWordBits + 1, 0);
    p.words_[k / kWordBits] = std::uint64_t{1} << (k % kWordBits);
    return p;
}

BitPoly BitPoly::from_words(std::vector<std::uint64_t> words) {
    BitPoly p;
    p.words_ = std::move(words);
    p.trim();
    return p;
}

void BitPoly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::optional<unsigned> BitPoly::degree() const {
    if (words_.empty()) return std::nullopt;
    unsigned top = static_cast<unsigned>(words_.size()) - 1;
    std::uint64_t w = words_.back();
    unsigned bit = 63;
    while (!(w >> bit & 1)) --bit;
    return top * kWordBits + bit;
}

unsigned BitPoly::degree_or0() const {
    auto d = degree();
    return d ? *d : 0;
}

bool BitPoly::coeff(unsigned k) const {
    std::size_t w = k / kWordBits;
    if (w >= words_.size()) return false;
    return words_[w] >> (k % kWordBits) & 1;
}

void BitPoly::set_coeff(unsigned k, bool value) {
    std::size_t w = k / kWordBits;
    if (w >= words_.size()) {
        if (!value) return;
        words_.resize(w + 1, 0);
    }
    std::uint64_t mask = std::uint64_t{1} << (k % kWordBits);
    if (value)
        words_[w] |= mask;
    else
        words_[w] &= ~mask;
    trim();
}

std::size_t BitPoly::weight() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

BitPoly BitPoly::operator+(const BitPoly& rhs) const {
    BitPoly out = *this;
    out += rhs;
    return out;
}

BitPoly& BitPoly::operator+=(const BitPoly& rhs) {
    if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    trim();
    return *this;
}

BitPoly BitPoly::operator<<(unsigned k) const {
    if (is_zero()) return BitPoly();
    unsigned wordShift = k / kWordBits;
    unsigned bitShift = k % kWordBits;
    BitPoly out;
    out.words_.assign(words_.size() + wordShift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        out.words_[i + wordShift] ^= words_[i] << bitShift;
        if (bitShift) out.words_[i + wordShift + 1] ^= words_[i] >> (kWordBits - bitShift);
    }
    out.trim();
    return out;
}

BitPoly BitPoly::operator>>(unsigned k) const {
    unsigned wordShift = k / kWordBits;
    unsigned bitShift = k % kWordBits;
    if (wordShift >= words_.size()) return BitPoly();
    BitPoly out;
    out.words_.assign(words_.size() - wordShift, 0);
    for (std::size_t i = 0; i < out.words_.size(); ++i) {
        out.words_[i] = words_[i + wordShift] >> bitShift;
        if (bitShift && i + wordShift + 1 < words_.size())
            out.words_[i] |= words_[i + wordShift + 1] << (kWordBits - bitShift);
    }
    out.trim();
    return out;
}

BitPoly BitPoly::operator*(const BitPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return BitPoly();
    BitPoly out;
    out.words_.assign(words_.size() + rhs.words_.size(), 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            unsigned bit = static_cast<unsigned>(__builtin_ctzll(w));
            w &= w - 1;
            unsigned shift = bit; // within-word shift of rhs into out at word offset i
            for (std::size_t j = 0; j < rhs.words_.size(); ++j) {
                out.words_[i + j] ^= rhs.words_[j] << shift;
                if (shift) out.words_[i + j + 1] ^= rhs.words_[j] >> (kWordBits - shift);
            }
        }
    }
    out.trim();
    return out;
}

std::pair<BitPoly, BitPoly> BitPoly::divmod(const BitPoly& a, const BitPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    unsigned db = *b.degree();
    BitPoly q;
    BitPoly r = a;
    while (!r.is_zero()) {
        unsigned dr = *r.degree();
        if (dr < db) break;
        unsigned shift = dr - db;
        r += b << shift;
        q.set_coeff(shift, true);
    }
    return {q, r};
}

BitPoly BitPoly::operator/(const BitPoly& rhs) const { return divmod(*this, rhs).first; }
BitPoly BitPoly::operator%(const BitPoly& rhs) const { return divmod(*this, rhs).second; }

BitPoly BitPoly::squared() const {
    BitPoly out;
    if (is_zero()) return out;
    out.words_.assign(words_.size() * 2, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            unsigned bit = static_cast<unsigned>(__builtin_ctzll(w));
            w &= w - 1;
            unsigned k = 2 * bit;
            out.words_[2 * i + k / kWordBits] ^= std::uint64_t{1} << (k % kWordBits);
        }
    }
    out.trim();
    return out;
}

BitPoly BitPoly::pow(std::uint64_t e) const {
    if (e == 0) return one();
    if (is_zero()) return BitPoly();
    std::uint64_t d = degree_or0();
    if (d > 0 && d * e > kMaxDegree)
        throw std::invalid_argument("polynomial power exceeds the supported degree cap");
    BitPoly base = *this;
    BitPoly acc = one();
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base.squared();
    }
    return acc;
}

BitPoly BitPoly::reversed() const {
    if (is_zero()) return BitPoly();
    unsigned d = *degree();
    BitPoly out;
    for (unsigned k = 0; k <= d; ++k)
        if (coeff(k)) out.set_coeff(d - k, true);
    return out;
}

BitPoly BitPoly::parse(std::string_view text) {
    // Strip surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty polynomial");

    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        BitPoly p;
        std::string_view digits = text.substr(2);
        for (char c : digits) {
            unsigned v;
            if (c >= '0' && c <= '9')
                v = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                v = static_cast<unsigned>(c - 'a') + 10;
            else if (c >= 'A' && c <= 'F')
                v = static_cast<unsigned>(c - 'A') + 10;
            else
                throw std::invalid_argument(bad_token(text));
            // Shift the accumulated value up one nibble and add the digit.
            p = (p << 4);
            for (unsigned b = 0; b < 4; ++b)
                if (v >> b & 1) p.set_coeff(b, !p.coeff(b));
        }
        return p;
    }

    BitPoly p;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('+', pos);
        std::string_view token = text.substr(pos, next == std::string_view::npos ? next : next - pos);
        pos = next == std::string_view::npos ? text.size() + 1 : next + 1;

        // Trim spaces around the token.
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
        if (token.empty()) throw std::invalid_argument(bad_token(token));

        if (token == "0") {
            // A standalone zero term contributes nothing.
            continue;
        }
        if (token == "1") {
            p.set_coeff(0, !p.coeff(0));
            continue;
        }
        if (token[0] != 'D' && token[0] != 'x' && token[0] != 'X')
            throw std::invalid_argument(bad_token(token));
        unsigned k = 1;
        if (token.size() > 1) {
            if (token[1] != '^' || token.size() == 2) throw std::invalid_argument(bad_token(token));
            k = 0;
            for (std::size_t i = 2; i < token.size(); ++i) {
                char c = token[i];
                if (c < '0' || c > '9') throw std::invalid_argument(bad_token(token));
                k = k * 10 + static_cast<unsigned>(c - '0');
                if (k > kMaxDegree) throw std::invalid_argument(bad_token(token));
            }
        }
        p.set_coeff(k, !p.coeff(k));
    }
    return p;
}

std::string BitPoly::text() const {
    if (is_zero()) return "0";
    std::string out;
    unsigned d = *degree();
    for (unsigned k = 0; k <= d; ++k) {
        if (!coeff(k)) continue;
        if (!out.empty()) out += '+';
        if (k == 0)
            out += '1';
        else if (k == 1)
            out += 'D';
        else
            out += "D^" + std::to_string(k);
    }
    return out;
}

std::string BitPoly::hex() const {
    if (is_zero()) return "0x0";
    static const char* digits = "0123456789abcdef";
    std::string out;
    bool started = false;
    for (std::size_t i = words_.size(); i-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            unsigned v = static_cast<unsigned>(words_[i] >> (nib * 4)) & 0xF;
            if (!started && v == 0) continue;
            started = true;
            out += digits[v];
        }
    }
    return "0x" + out;
}

std::size_t BitPoly::hash_value() const {
    // FNV-1a over the packed words.
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : words_) {
        for (int i = 0; i < 8; ++i) {
            h ^= (w >> (i * 8)) & 0xFF;
            h *= 1099511628211ull;
        }
    }
    return static_cast<std::size_t>(h);
}

BitPoly gcd(BitPoly a, BitPoly b) {
    while (!b.is_zero()) {
        BitPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::pair<BitPoly, BitPoly> gcd_with_inverse(const BitPoly& a, const BitPoly& m) {
    if (m.is_zero()) throw std::invalid_argument("zero modulus");
    // Invariants: r0 = u0*a (mod m), r1 = u1*a (mod m).
    BitPoly r0 = m, r1 = a % m;
    BitPoly u0 = BitPoly::zero(), u1 = BitPoly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = BitPoly::divmod(r0, r1);
        BitPoly u2 = u0 + q * u1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {r0, u0 % m};
}

BitPoly poly_mul_mod(const BitPoly& a, const BitPoly& b, const BitPoly& m) {
    if (m.is_zero()) throw std::invalid_argument("zero modulus");
    return (a * b) % m;
}

BitPoly poly_pow_mod(const BitPoly& a, std::uint64_t e, const BitPoly& m) {
    if (m.is_zero()) throw std::invalid_argument("zero modulus");
    BitPoly base = a % m;
    BitPoly acc = BitPoly::one() % m;
    while (e) {
        if (e & 1) acc = (acc * base) % m;
        e >>= 1;
        if (e) base = base.squared() % m;
    }
    return acc;
}

} // namespace sgca
