#include <stdexcept>
#include <random>

#include "doctest.h"
#include "sgca/automaton.hpp"
#include "sgca/sequences.hpp"

using namespace sgca;

namespace {

// Reference step: per-cell loop straight off the update rules.
CaState naive_step(const RuleVector& rules, const CaState& s) {
    std::size_t n = s.size();
    CaState out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Bit v = 0;
        if (i > 0) v ^= s[i - 1];
        if (i + 1 < n) v ^= s[i + 1];
        if (rules.self_term(i + 1)) v ^= s[i];
        out[i] = v;
    }
    return out;
}

CaState random_state(std::mt19937_64& rng, std::size_t n) {
    CaState s(n);
    for (auto& b : s) b = static_cast<Bit>(rng() & 1);
    return s;
}

} // namespace

TEST_SUITE("automaton") {

TEST_CASE("rule vectors validate their text") {
    CHECK(RuleVector("0111001110").size() == 10);
    CHECK(RuleVector("01").self_term(2));
    CHECK_FALSE(RuleVector("01").self_term(1));
    CHECK(RuleVector("011").reversed().text() == "110");
    CHECK_THROWS_AS(RuleVector(""), std::invalid_argument);
    CHECK_THROWS_AS(RuleVector("01a"), std::invalid_argument);
}

TEST_CASE("one documented step of the ten-cell automaton") {
    RuleVector rv("0111001110");
    CHECK(format_bits(ca_step(rv, parse_bits("0001110110"))) == "0010010001");
}

TEST_CASE("trivial and boundary behavior") {
    RuleVector one("1");
    CHECK(format_bits(ca_step(one, parse_bits("1"))) == "1"); // self term only
    RuleVector zero("0");
    CHECK(format_bits(ca_step(zero, parse_bits("1"))) == "0"); // no neighbours, no self
    RuleVector rv("0111001110");
    CHECK(format_bits(ca_step(rv, CaState(10, 0))) == "0000000000");
    CHECK_THROWS_AS(ca_step(rv, parse_bits("01")), std::invalid_argument);
}

TEST_CASE("packed stepping matches the per-cell reference on random inputs") {
    std::mt19937_64 rng(0x0123456789abcdefull);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 150; // cross the word boundary regularly
        std::string rules(n, '0');
        for (auto& c : rules)
            if (rng() & 1) c = '1';
        RuleVector rv(rules);
        CaState s = random_state(rng, n);
        CHECK(ca_step(rv, s) == naive_step(rv, s));
    }
}

TEST_CASE("cell trace of the documented stream") {
    RuleVector rv("0111001110");
    CaState s = parse_bits("0001110110");
    BitSeq t10 = cell_trace(rv, s, 10, 62);
    CHECK(format_bits(t10) ==
          "01011010011111110110001001010001110100110011100000101110101100");
    BitSeq doubled = cell_trace(rv, s, 10, 124);
    CHECK(seq_period(doubled) == std::size_t{62});
    // The first value is the state's own cell (time 0 included).
    CHECK(t10[0] == s[9]);
    CHECK_THROWS_AS(cell_trace(rv, s, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(cell_trace(rv, s, 11, 4), std::invalid_argument);
}

TEST_CASE("cell trace equals repeated stepping") {
    std::mt19937_64 rng(0x1020304050607080ull);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng() % 40;
        std::string rules(n, '0');
        for (auto& c : rules)
            if (rng() & 1) c = '1';
        RuleVector rv(rules);
        CaState s = random_state(rng, n);
        std::size_t cell = 1 + rng() % n;
        BitSeq trace = cell_trace(rv, s, cell, 30);
        CaState cur = s;
        for (std::size_t t = 0; t < 30; ++t) {
            REQUIRE(trace[t] == cur[cell - 1]);
            cur = ca_step(rv, cur);
        }
    }
}

TEST_CASE("transition matrix is tridiagonal with the rules on the diagonal") {
    auto a = transition_matrix(RuleVector("01"));
    REQUIRE(a.size() == 2);
    CHECK(a[0] == std::vector<Bit>{0, 1});
    CHECK(a[1] == std::vector<Bit>{1, 1});
    auto b = transition_matrix(RuleVector("0111001110"));
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
            Bit want = 0;
            if (i + 1 == j || j + 1 == i) want = 1;
            if (i == j) want = static_cast<Bit>(i == 1 || i == 2 || i == 3 || i == 6 ||
                                                i == 7 || i == 8);
            CHECK(b[i][j] == want);
        }
}

TEST_CASE("matrix action equals the automaton step") {
    std::mt19937_64 rng(0xa5a5a5a55a5a5a5aull);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 24;
        std::string rules(n, '0');
        for (auto& c : rules)
            if (rng() & 1) c = '1';
        RuleVector rv(rules);
        auto a = transition_matrix(rv);
        CaState s = random_state(rng, n);
        CaState byMatrix(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            Bit acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc ^= static_cast<Bit>(a[i][j] & s[j]);
            byMatrix[i] = acc;
        }
        CHECK(byMatrix == ca_step(rv, s));
    }
}

TEST_CASE("stepping is linear over GF(2)") {
    std::mt19937_64 rng(0x6789abcdef012345ull);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 32;
        std::string rules(n, '0');
        for (auto& c : rules)
            if (rng() & 1) c = '1';
        RuleVector rv(rules);
        CaState x = random_state(rng, n), y = random_state(rng, n);
        CaState sum(n);
        for (std::size_t i = 0; i < n; ++i) sum[i] = static_cast<Bit>(x[i] ^ y[i]);
        CaState stepSum = ca_step(rv, sum);
        CaState stepX = ca_step(rv, x), stepY = ca_step(rv, y);
        for (std::size_t i = 0; i < n; ++i)
            REQUIRE(stepSum[i] == static_cast<Bit>(stepX[i] ^ stepY[i]));
    }
}

} // TEST_SUITE
