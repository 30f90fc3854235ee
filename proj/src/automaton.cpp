#include "sgca/automaton.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgca {

namespace {
constexpr unsigned kWordBits = 64;
}

RuleVector::RuleVector(std::string rules) : rules_(std::move(rules)) {
    if (rules_.empty()) throw std::invalid_argument("rule vector must be nonempty");
    for (char c : rules_)
        if (c != '0' && c != '1')
            throw std::invalid_argument(std::string("bad rule character: '") + c + "'");
}

RuleVector RuleVector::reversed() const {
    std::string r(rules_.rbegin(), rules_.rend());
    return RuleVector(std::move(r));
}

PackedCa::PackedCa(const RuleVector& rules, const CaState& state) : n_(rules.size()) {
    if (state.size() != n_)
        throw std::invalid_argument("state length must equal the rule vector length");
    std::size_t words = (n_ + kWordBits - 1) / kWordBits;
    w_.assign(words, 0);
    self_.assign(words, 0);
    tmp_.assign(words, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        if (state[i]) w_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
        if (rules.self_term(i + 1)) self_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
    }
}

void PackedCa::step() {
    // next = (row shifted toward higher cells) ^ (row shifted toward lower
    // cells) ^ (row & self-mask); null boundaries fall out of the shifts.
    std::size_t words = w_.size();
    std::uint64_t carryUp = 0;
    for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t cur = w_[i];
        std::uint64_t up = (cur << 1) | carryUp; // left neighbour feeds cell i
        carryUp = cur >> (kWordBits - 1);
        tmp_[i] = up ^ (cur & self_[i]);
    }
    std::uint64_t carryDown = 0;
    for (std::size_t i = words; i-- > 0;) {
        std::uint64_t cur = w_[i];
        std::uint64_t down = (cur >> 1) | (carryDown << (kWordBits - 1));
        carryDown = cur & 1;
        tmp_[i] ^= down;
    }
    // Clear any bits beyond cell n in the top word.
    unsigned used = static_cast<unsigned>(n_ % kWordBits);
    if (used) tmp_.back() &= (~std::uint64_t{0}) >> (kWordBits - used);
    std::swap(w_, tmp_);
}

Bit PackedCa::cell(std::size_t cell) const {
    std::size_t i = cell - 1;
    return static_cast<Bit>(w_[i / kWordBits] >> (i % kWordBits) & 1);
}

CaState PackedCa::state() const {
    CaState out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        out[i] = static_cast<Bit>(w_[i / kWordBits] >> (i % kWordBits) & 1);
    return out;
}

CaState ca_step(const RuleVector& rules, const CaState& state) {
    PackedCa ca(rules, state);
    ca.step();
    return ca.state();
}

BitSeq cell_trace(const RuleVector& rules, const CaState& state, std::size_t cell, std::size_t n) {
    if (cell < 1 || cell > rules.size())
        throw std::invalid_argument("cell index out of range");
    PackedCa ca(rules, state);
    BitSeq out(n);
    for (std::size_t t = 0; t < n; ++t) {
        out[t] = ca.cell(cell);
        if (t + 1 < n) ca.step();
    }
    return out;
}

std::vector<std::vector<Bit>> transition_matrix(const RuleVector& rules) {
    std::size_t n = rules.size();
    std::vector<std::vector<Bit>> a(n, std::vector<Bit>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) a[i][i - 1] = 1;
        if (rules.self_term(i + 1)) a[i][i] = 1;
        if (i + 1 < n) a[i][i + 1] = 1;
    }
    return a;
}

} // namespace sgca
