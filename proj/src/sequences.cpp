#include "sgca/sequences.hpp"

#include <stdexcept>

#include "sgca/errors.hpp"

namespace sgca {

BitSeq parse_bits(std::string_view text) {
    BitSeq out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '0')
            out.push_back(0);
        else if (c == '1')
            out.push_back(1);
        else
            throw std::invalid_argument(std::string("bad bit character: '") + c + "'");
    }
    return out;
}

std::string format_bits(const BitSeq& s) {
    std::string out;
    out.reserve(s.size());
    for (Bit b : s) out += b ? '1' : '0';
    return out;
}

Lfsr::Lfsr(BitPoly feedback, const BitSeq& seed) : feedback_(std::move(feedback)) {
    auto deg = feedback_.degree();
    if (!deg || *deg < 1) throw std::invalid_argument("feedback polynomial must have degree >= 1");
    if (*deg > 64) throw std::invalid_argument("register length above 64 is not supported");
    if (!feedback_.coeff(0)) throw std::invalid_argument("feedback polynomial must have constant term 1");
    if (seed.size() != *deg)
        throw std::invalid_argument("seed length must equal the feedback polynomial degree");
    len_ = *deg;
    // Seed arrives as s_1..s_L; stage j holds s_{L-j} so that stage 0 is the
    // first bit emitted.
    for (unsigned j = 0; j < len_; ++j)
        if (seed[len_ - 1 - j]) state_ |= std::uint64_t{1} << j;
    // Tap s_k lives in stage L-k.
    for (unsigned k = 1; k <= len_; ++k)
        if (feedback_.coeff(k)) taps_ |= std::uint64_t{1} << (len_ - k);
}

Bit Lfsr::step() {
    Bit out = static_cast<Bit>(state_ & 1);
    std::uint64_t fb = static_cast<std::uint64_t>(__builtin_popcountll(state_ & taps_)) & 1;
    state_ = (state_ >> 1) | (fb << (len_ - 1));
    return out;
}

BitSeq Lfsr::generate(std::size_t n) {
    BitSeq out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = step();
    return out;
}

std::optional<std::size_t> seq_period(const BitSeq& s) {
    std::size_t n = s.size();
    for (std::size_t t = 1; 2 * t <= n; ++t) {
        bool ok = true;
        for (std::size_t i = 0; i + t < n; ++i) {
            if (s[i] != s[i + t]) {
                ok = false;
                break;
            }
        }
        if (ok) return t;
    }
    return std::nullopt;
}

BmResult berlekamp_massey(const BitSeq& s) {
    std::size_t n = s.size();
    std::vector<Bit> c(n + 1, 0), b(n + 1, 0);
    c[0] = b[0] = 1;
    std::size_t lc = 0, m = 1;
    for (std::size_t t = 0; t < n; ++t) {
        Bit d = s[t];
        for (std::size_t k = 1; k <= lc && k <= t; ++k) d ^= static_cast<Bit>(c[k] & s[t - k]);
        if (d == 0) {
            ++m;
        } else if (2 * lc <= t) {
            std::vector<Bit> tmp = c;
            for (std::size_t k = 0; k + m <= n; ++k) c[k + m] ^= b[k];
            lc = t + 1 - lc;
            b = std::move(tmp);
            m = 1;
        } else {
            for (std::size_t k = 0; k + m <= n; ++k) c[k + m] ^= b[k];
            ++m;
        }
    }
    BitPoly conn;
    for (std::size_t k = 0; k <= n; ++k)
        if (c[k]) conn.set_coeff(static_cast<unsigned>(k), true);
    return {lc, conn};
}

BitSeq regenerate_recurrence(const BitPoly& connection, std::size_t lc,
                             const BitSeq& first, std::size_t n) {
    if (connection.is_zero() || !connection.coeff(0))
        throw std::invalid_argument("connection polynomial must have constant term 1");
    if (first.size() < lc) throw std::invalid_argument("need lc initial bits");
    if (connection.degree_or0() > lc)
        throw std::invalid_argument("connection degree exceeds the stated complexity");
    BitSeq out(n);
    std::vector<unsigned> taps;
    for (unsigned k = 1; k <= connection.degree_or0(); ++k)
        if (connection.coeff(k)) taps.push_back(k);
    for (std::size_t t = 0; t < n; ++t) {
        if (t < lc) {
            out[t] = first[t];
            continue;
        }
        Bit v = 0;
        for (unsigned k : taps) v ^= out[t - k];
        out[t] = v;
    }
    return out;
}

BitPoly minimal_polynomial_of_seq(const BitSeq& s) {
    bool allZero = true;
    for (Bit b : s)
        if (b) {
            allZero = false;
            break;
        }
    if (allZero) return BitPoly::one();
    BmResult bm = berlekamp_massey(s);
    if (2 * bm.lc > s.size())
        throw AnalysisError(AnalysisFault::InsufficientData,
                            "window too short to pin down the minimal polynomial");
    if (bm.connection.degree_or0() != bm.lc)
        throw AnalysisError(AnalysisFault::InsufficientData,
                            "window is not purely periodic over its span");
    return bm.connection;
}

} // namespace sgca
