#include "sgca/field.hpp"

#include <stdexcept>

namespace sgca {

namespace {

// Distinct prime factors of 2^m - 1, indexed by m (entry 0 unused).
const std::vector<std::uint64_t> kMersenneFactors[65] = {
    {},  // m=0 (unused)
    {},  // m=1
    {3ull},  // m=2
    {7ull},  // m=3
    {3ull, 5ull},  // m=4
    {31ull},  // m=5
    {3ull, 7ull},  // m=6
    {127ull},  // m=7
    {3ull, 5ull, 17ull},  // m=8
    {7ull, 73ull},  // m=9
    {3ull, 11ull, 31ull},  // m=10
    {23ull, 89ull},  // m=11
    {3ull, 5ull, 7ull, 13ull},  // m=12
    {8191ull},  // m=13
    {3ull, 43ull, 127ull},  // m=14
    {7ull, 31ull, 151ull},  // m=15
    {3ull, 5ull, 17ull, 257ull},  // m=16
    {131071ull},  // m=17
    {3ull, 7ull, 19ull, 73ull},  // m=18
    {524287ull},  // m=19
    {3ull, 5ull, 11ull, 31ull, 41ull},  // m=20
    {7ull, 127ull, 337ull},  // m=21
    {3ull, 23ull, 89ull, 683ull},  // m=22
    {47ull, 178481ull},  // m=23
    {3ull, 5ull, 7ull, 13ull, 17ull, 241ull},  // m=24
    {31ull, 601ull, 1801ull},  // m=25
    {3ull, 2731ull, 8191ull},  // m=26
    {7ull, 73ull, 262657ull},  // m=27
    {3ull, 5ull, 29ull, 43ull, 113ull, 127ull},  // m=28
    {233ull, 1103ull, 2089ull},  // m=29
    {3ull, 7ull, 11ull, 31ull, 151ull, 331ull},  // m=30
    {2147483647ull},  // m=31
    {3ull, 5ull, 17ull, 257ull, 65537ull},  // m=32
    {7ull, 23ull, 89ull, 599479ull},  // m=33
    {3ull, 43691ull, 131071ull},  // m=34
    {31ull, 71ull, 127ull, 122921ull},  // m=35
    {3ull, 5ull, 7ull, 13ull, 19ull, 37ull, 73ull, 109ull},  // m=36
    {223ull, 616318177ull},  // m=37
    {3ull, 174763ull, 524287ull},  // m=38
    {7ull, 79ull, 8191ull, 121369ull},  // m=39
    {3ull, 5ull, 11ull, 17ull, 31ull, 41ull, 61681ull},  // m=40
    {13367ull, 164511353ull},  // m=41
    {3ull, 7ull, 43ull, 127ull, 337ull, 5419ull},  // m=42
    {431ull, 9719ull, 2099863ull},  // m=43
    {3ull, 5ull, 23ull, 89ull, 397ull, 683ull, 2113ull},  // m=44
    {7ull, 31ull, 73ull, 151ull, 631ull, 23311ull},  // m=45
    {3ull, 47ull, 178481ull, 2796203ull},  // m=46
    {2351ull, 4513ull, 13264529ull},  // m=47
    {3ull, 5ull, 7ull, 13ull, 17ull, 97ull, 241ull, 257ull, 673ull},  // m=48
    {127ull, 4432676798593ull},  // m=49
    {3ull, 11ull, 31ull, 251ull, 601ull, 1801ull, 4051ull},  // m=50
    {7ull, 103ull, 2143ull, 11119ull, 131071ull},  // m=51
    {3ull, 5ull, 53ull, 157ull, 1613ull, 2731ull, 8191ull},  // m=52
    {6361ull, 69431ull, 20394401ull},  // m=53
    {3ull, 7ull, 19ull, 73ull, 87211ull, 262657ull},  // m=54
    {23ull, 31ull, 89ull, 881ull, 3191ull, 201961ull},  // m=55
    {3ull, 5ull, 17ull, 29ull, 43ull, 113ull, 127ull, 15790321ull},  // m=56
    {7ull, 32377ull, 524287ull, 1212847ull},  // m=57
    {3ull, 59ull, 233ull, 1103ull, 2089ull, 3033169ull},  // m=58
    {179951ull, 3203431780337ull},  // m=59
    {3ull, 5ull, 7ull, 11ull, 13ull, 31ull, 41ull, 61ull, 151ull, 331ull, 1321ull},  // m=60
    {2305843009213693951ull},  // m=61
    {3ull, 715827883ull, 2147483647ull},  // m=62
    {7ull, 73ull, 127ull, 337ull, 92737ull, 649657ull},  // m=63
    {3ull, 5ull, 17ull, 257ull, 641ull, 65537ull, 6700417ull},  // m=64
};

std::vector<unsigned> prime_factors_of(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned q = 2; static_cast<std::uint64_t>(q) * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// D^(2^k) mod p by k repeated squarings.
BitPoly frobenius_power_of_d(unsigned k, const BitPoly& p) {
    BitPoly x = BitPoly::monomial(1) % p;
    for (unsigned i = 0; i < k; ++i) x = x.squared() % p;
    return x;
}

} // namespace

const std::vector<std::uint64_t>& mersenne_prime_factors(unsigned m) {
    if (m < 1 || m > 64) throw std::invalid_argument("factor table covers 1 <= m <= 64");
    return kMersenneFactors[m];
}

bool is_irreducible(const BitPoly& p) {
    auto deg = p.degree();
    if (!deg || *deg < 1) throw std::invalid_argument("irreducibility is defined for degree >= 1");
    unsigned m = *deg;
    if (m == 1) return true;
    const BitPoly d = BitPoly::monomial(1);
    // gcd step for every maximal proper subfield.
    for (unsigned q : prime_factors_of(m)) {
        BitPoly g = gcd(frobenius_power_of_d(m / q, p) + d % p, p);
        if (!(g == BitPoly::one())) return false;
    }
    return frobenius_power_of_d(m, p) == d % p;
}

bool is_primitive(const BitPoly& p) {
    auto deg = p.degree();
    if (!deg || *deg < 1) throw std::invalid_argument("primitivity is defined for degree >= 1");
    unsigned m = *deg;
    if (m > 64) throw std::invalid_argument("primitivity test supports degree <= 64");
    if (!p.coeff(0)) return false; // D divides p: the residue of D is not invertible
    if (!is_irreducible(p)) return false;
    std::uint64_t group = (m == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    const BitPoly one = BitPoly::one();
    for (std::uint64_t q : kMersenneFactors[m])
        if (poly_pow_mod(BitPoly::monomial(1), group / q, p) == one) return false;
    return poly_pow_mod(BitPoly::monomial(1), group, p) == one;
}

FieldContext::FieldContext(BitPoly modulus) : modulus_(std::move(modulus)) {
    auto deg = modulus_.degree();
    if (!deg || *deg < 1 || *deg > 64)
        throw std::invalid_argument("field modulus must have degree 1..64");
    if (!is_primitive(modulus_))
        throw std::invalid_argument("field modulus must be primitive");
    m_ = *deg;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    return FieldElement(*ctx_, residue_ + rhs.residue_);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    return FieldElement(*ctx_, poly_mul_mod(residue_, rhs.residue_, ctx_->modulus()));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    return FieldElement(*ctx_, poly_pow_mod(residue_, e, ctx_->modulus()));
}

BitPoly minimal_polynomial_of_power(const FieldContext& ctx, std::uint64_t e) {
    unsigned m = ctx.m();
    std::uint64_t group = (m == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    if (e < 1 || (m < 64 && e > group))
        throw std::invalid_argument("exponent must satisfy 1 <= e < 2^m");

    // Collect the Frobenius conjugates of alpha^e by repeated squaring.
    const BitPoly& mod = ctx.modulus();
    BitPoly root = poly_pow_mod(BitPoly::monomial(1), e, mod);
    std::vector<BitPoly> conjugates;
    BitPoly cur = root;
    do {
        conjugates.push_back(cur);
        cur = cur.squared() % mod;
    } while (!(cur == root));

    // Expand prod (D + beta). Coefficients live in the field; they must all
    // collapse to GF(2) scalars because the product is Galois-stable.
    std::vector<BitPoly> coeffs = {BitPoly::one()}; // coeffs[j] multiplies D^j
    for (const BitPoly& beta : conjugates) {
        std::vector<BitPoly> next(coeffs.size() + 1);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] += coeffs[j];
            next[j] += poly_mul_mod(coeffs[j], beta, mod);
        }
        coeffs = std::move(next);
    }

    BitPoly result;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        if (!(coeffs[j] == BitPoly::one()))
            throw std::logic_error("conjugate product left a non-scalar coefficient");
        result.set_coeff(static_cast<unsigned>(j), true);
    }
    return result;
}

} // namespace sgca
