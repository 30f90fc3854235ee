#include <stdexcept>
#include <random>

#include "doctest.h"
#include "sgca/poly.hpp"

using namespace sgca;

namespace {

// Naive reference multiply: per-bit double loop, no word tricks.
BitPoly naive_mul(const BitPoly& a, const BitPoly& b) {
    BitPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (unsigned i = 0; i <= *a.degree(); ++i) {
        if (!a.coeff(i)) continue;
        for (unsigned j = 0; j <= *b.degree(); ++j)
            if (b.coeff(j)) out.set_coeff(i + j, !out.coeff(i + j));
    }
    return out;
}

BitPoly random_poly(std::mt19937_64& rng, unsigned maxDegree) {
    std::uniform_int_distribution<unsigned> degDist(0, maxDegree);
    unsigned d = degDist(rng);
    BitPoly p = BitPoly::monomial(d);
    for (unsigned k = 0; k < d; ++k)
        if (rng() & 1) p.set_coeff(k, true);
    return p;
}

} // namespace

TEST_SUITE("poly") {

TEST_CASE("parse and format round-trip the documented polynomials") {
    CHECK(BitPoly::parse("1+D+D^3").text() == "1+D+D^3");
    CHECK(BitPoly::parse("1+D^3+D^4").text() == "1+D^3+D^4");
    CHECK(BitPoly::parse("1+D+D^3+D^4+D^5").text() == "1+D+D^3+D^4+D^5");
    CHECK(BitPoly::parse("D").text() == "D");
    CHECK(BitPoly::parse("1").text() == "1");
    CHECK(BitPoly::parse("0").is_zero());
    CHECK(BitPoly::parse("0").text() == "0");
}

TEST_CASE("hex form uses bit k for the D^k coefficient") {
    CHECK(BitPoly::parse("0x25") == BitPoly::parse("1+D^2+D^5"));
    CHECK(BitPoly::parse("0xb") == BitPoly::parse("1+D+D^3"));
    CHECK(BitPoly::parse("0x19") == BitPoly::parse("1+D^3+D^4"));
    CHECK(BitPoly::parse("1+D^2+D^5").hex() == "0x25");
    CHECK(BitPoly::zero().hex() == "0x0");
    CHECK(BitPoly::parse("0x0").is_zero());
    // Values wider than one word survive the round trip.
    BitPoly wide = BitPoly::monomial(100) + BitPoly::one();
    CHECK(BitPoly::parse(wide.hex()) == wide);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(BitPoly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BitPoly::parse("1+"), std::invalid_argument);
    CHECK_THROWS_AS(BitPoly::parse("D^"), std::invalid_argument);
    CHECK_THROWS_AS(BitPoly::parse("2+D"), std::invalid_argument);
    CHECK_THROWS_AS(BitPoly::parse("D^x"), std::invalid_argument);
    CHECK_THROWS_AS(BitPoly::parse("0xg1"), std::invalid_argument);
    CHECK_THROWS_AS(BitPoly::parse("1-D"), std::invalid_argument);
}

TEST_CASE("degree, coefficients, weight") {
    BitPoly p = BitPoly::parse("1+D^2+D^5");
    REQUIRE(p.degree().has_value());
    CHECK(*p.degree() == 5);
    CHECK(p.coeff(0));
    CHECK_FALSE(p.coeff(1));
    CHECK(p.coeff(2));
    CHECK(p.coeff(5));
    CHECK(p.weight() == 3);
    CHECK_FALSE(BitPoly::zero().degree().has_value());
    CHECK(BitPoly::monomial(70).degree() == 70);
}

TEST_CASE("addition is XOR of coefficient sets") {
    BitPoly a = BitPoly::parse("1+D+D^3");
    BitPoly b = BitPoly::parse("D+D^2");
    CHECK(a + b == BitPoly::parse("1+D^2+D^3"));
    CHECK(a + a == BitPoly::zero());
    CHECK(a + BitPoly::zero() == a);
}

TEST_CASE("multiplication matches a naive per-bit reference on random inputs") {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    for (int trial = 0; trial < 200; ++trial) {
        BitPoly a = random_poly(rng, 90);
        BitPoly b = random_poly(rng, 90);
        CHECK(a * b == naive_mul(a, b));
    }
    CHECK(BitPoly::parse("1+D") * BitPoly::parse("1+D") == BitPoly::parse("1+D^2"));
    CHECK(BitPoly::parse("1+D+D^3+D^4+D^5") * BitPoly::zero() == BitPoly::zero());
}

TEST_CASE("squaring agrees with self-multiplication") {
    std::mt19937_64 rng(0xdeadbeefcafef00dull);
    for (int trial = 0; trial < 100; ++trial) {
        BitPoly a = random_poly(rng, 120);
        CHECK(a.squared() == a * a);
    }
    CHECK(BitPoly::zero().squared() == BitPoly::zero());
}

TEST_CASE("division identity a = q*b + r with deg r < deg b") {
    std::mt19937_64 rng(0x1234567887654321ull);
    for (int trial = 0; trial < 200; ++trial) {
        BitPoly a = random_poly(rng, 80);
        BitPoly b = random_poly(rng, 40);
        auto [q, r] = BitPoly::divmod(a, b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
    }
    CHECK_THROWS_AS(BitPoly::divmod(BitPoly::one(), BitPoly::zero()), std::invalid_argument);
}

TEST_CASE("gcd divides both arguments and handles coprime inputs") {
    BitPoly a = BitPoly::parse("1+D^2");            // (1+D)^2
    BitPoly b = BitPoly::parse("1+D+D^2+D^3");       // (1+D)(1+D^2) = (1+D)^3
    CHECK(gcd(a, b) == BitPoly::parse("1+D^2"));
    CHECK(gcd(BitPoly::parse("1+D+D^3"), BitPoly::parse("1+D^3+D^4")) == BitPoly::one());
    CHECK(gcd(a, BitPoly::zero()) == a);
    std::mt19937_64 rng(0x5555aaaa5555aaaaull);
    for (int trial = 0; trial < 100; ++trial) {
        BitPoly x = random_poly(rng, 30);
        BitPoly y = random_poly(rng, 30);
        BitPoly g = gcd(x, y);
        CHECK((x % g).is_zero());
        CHECK((y % g).is_zero());
    }
}

TEST_CASE("extended gcd produces a working modular inverse") {
    BitPoly m = BitPoly::parse("1+D^2+D^5");
    std::mt19937_64 rng(0xfeedface12345678ull);
    for (int trial = 0; trial < 50; ++trial) {
        BitPoly a = random_poly(rng, 4);
        auto [g, u] = gcd_with_inverse(a, m);
        CHECK(poly_mul_mod(u, a, m) == g % m);
        if (g == BitPoly::one()) CHECK(poly_mul_mod(u, a, m) == BitPoly::one());
    }
}

TEST_CASE("shift operators multiply and divide by powers of D") {
    BitPoly p = BitPoly::parse("1+D^2+D^5");
    CHECK((p << 3) == BitPoly::parse("D^3+D^5+D^8"));
    CHECK((p >> 1) == BitPoly::parse("D+D^4"));
    CHECK((p >> 6).is_zero());
    CHECK(((p << 64) >> 64) == p); // across word boundaries
}

TEST_CASE("pow and reversal") {
    BitPoly p = BitPoly::parse("1+D+D^4");
    CHECK(p.pow(0) == BitPoly::one());
    CHECK(p.pow(1) == p);
    CHECK(p.pow(4) == BitPoly::parse("1+D^4+D^16")); // squaring twice
    CHECK(p.pow(2) == p.squared());
    CHECK(BitPoly::parse("1+D^2+D^5").reversed() == BitPoly::parse("1+D^3+D^5"));
    CHECK(BitPoly::parse("1+D+D^3+D^4+D^5").reversed() == BitPoly::parse("1+D+D^2+D^4+D^5"));
    CHECK(BitPoly::zero().reversed() == BitPoly::zero());
    CHECK(BitPoly::parse("D^3").reversed() == BitPoly::one());
}

TEST_CASE("modular arithmetic: documented power identities") {
    // D^26 modulo the ten-cell characteristic polynomial.
    BitPoly m10 = BitPoly::parse("1+D^2+D^6+D^8+D^10");
    CHECK(poly_pow_mod(BitPoly::monomial(1), 26, m10) == BitPoly::parse("1+D^2"));
    // D^7 modulo the reciprocal-form quintic.
    BitPoly q = BitPoly::parse("1+D+D^2+D^4+D^5");
    CHECK(poly_pow_mod(BitPoly::monomial(1), 7, q) == BitPoly::parse("1+D^2"));
    // Consistency with plain pow + mod on random inputs.
    std::mt19937_64 rng(0xabcdef0123456789ull);
    for (int trial = 0; trial < 50; ++trial) {
        BitPoly a = random_poly(rng, 20);
        BitPoly m = random_poly(rng, 10);
        if (m.is_zero() || m.degree_or0() == 0) continue;
        std::uint64_t e = rng() % 12;
        CHECK(poly_pow_mod(a, e, m) == a.pow(e) % m);
        CHECK(poly_mul_mod(a, a, m) == (a * a) % m);
    }
    CHECK_THROWS_AS(poly_mul_mod(BitPoly::one(), BitPoly::one(), BitPoly::zero()),
                    std::invalid_argument);
}

TEST_CASE("pow rejects absurd degree growth") {
    CHECK_THROWS_AS(BitPoly::parse("1+D^100").pow(1u << 20), std::invalid_argument);
}

} // TEST_SUITE
