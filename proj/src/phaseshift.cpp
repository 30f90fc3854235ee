#include "sgca/phaseshift.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "sgca/errors.hpp"
#include "sgca/modeler.hpp"

namespace sgca {

namespace {

constexpr std::uint64_t kOrbitCap = std::uint64_t{1} << 22;

// All distinct powers of S modulo m, in order S^0, S^1, ..., stopping at the
// first repeat (the orbit is eventually periodic; for invertible S it is the
// full cyclic group generated by S).
struct ShiftOrbit {
    std::vector<BitPoly> powers;
    std::unordered_map<BitPoly, std::uint64_t, BitPolyHash> index;
};

ShiftOrbit enumerate_orbit(const BitPoly& m) {
    ShiftOrbit orbit;
    BitPoly cur = BitPoly::one() % m;
    const BitPoly s = BitPoly::monomial(1);
    while (orbit.index.find(cur) == orbit.index.end()) {
        if (orbit.powers.size() >= kOrbitCap)
            throw AnalysisError(AnalysisFault::InsufficientData,
                                "shift-operator orbit exceeds the search bound");
        orbit.index.emplace(cur, orbit.powers.size());
        orbit.powers.push_back(cur);
        cur = poly_mul_mod(cur, s, m);
    }
    return orbit;
}

// Least e with S^e * pivot == target (mod m), scanning the precomputed orbit.
std::optional<std::uint64_t> directed_shift(const ShiftOrbit& orbit, const BitPoly& pivot,
                                            const BitPoly& target, const BitPoly& m) {
    // Fast path: when the pivot is invertible mod m the answer is the orbit
    // position of target / pivot.
    auto [g, inv] = gcd_with_inverse(pivot, m);
    if (g == BitPoly::one()) {
        BitPoly quotient = poly_mul_mod(target, inv, m);
        auto it = orbit.index.find(quotient);
        if (it == orbit.index.end()) return std::nullopt;
        return it->second;
    }
    for (std::uint64_t e = 0; e < orbit.powers.size(); ++e)
        if (poly_mul_mod(orbit.powers[e], pivot, m) == target) return e;
    return std::nullopt;
}

} // namespace

std::vector<BitPoly> transfer_polynomials(const RuleVector& rules) {
    std::size_t n = rules.size();
    std::vector<BitPoly> pi(n + 1);
    const BitPoly s = BitPoly::monomial(1);
    pi[n] = BitPoly::one();
    if (n >= 2) {
        pi[n - 1] = rules.self_term(n) ? s + BitPoly::one() : s;
        for (std::size_t i = n - 1; i >= 2; --i) {
            BitPoly term = rules.self_term(i) ? s + BitPoly::one() : s;
            pi[i - 1] = term * pi[i] + pi[i + 1];
        }
    }
    // Closing identity pins the whole recurrence to the automaton.
    BitPoly head = rules.self_term(1) ? s + BitPoly::one() : s;
    BitPoly closing = head * pi[1] + (n >= 2 ? pi[2] : BitPoly::zero());
    if (!(closing == ca_charpoly(rules)))
        throw std::logic_error("transfer recurrence failed its closing identity");
    return pi;
}

std::optional<std::uint64_t> shift_log(const BitPoly& pi, const BitPoly& m) {
    if (m.is_zero() || m.degree_or0() < 1)
        throw std::invalid_argument("modulus must have degree >= 1");
    BitPoly r = pi % m;
    if (r.is_zero())
        throw AnalysisError(AnalysisFault::ZeroOperator,
                            "polynomial vanishes modulo the characteristic polynomial");
    ShiftOrbit orbit = enumerate_orbit(m);
    auto it = orbit.index.find(r);
    if (it == orbit.index.end()) return std::nullopt;
    return it->second;
}

PhaseReport phase_report(const RuleVector& rules) {
    std::size_t n = rules.size();
    PhaseReport report;
    report.charpoly = ca_charpoly(rules);
    std::vector<BitPoly> pi = transfer_polynomials(rules);
    for (std::size_t i = 1; i <= n; ++i) pi[i] = pi[i] % report.charpoly;
    ShiftOrbit orbit = enumerate_orbit(report.charpoly);

    // Grow classes scanning cells upward; ask each class's first-discovered
    // member whether it reaches the new cell by some power of S.
    struct Group {
        std::size_t pivot;
        std::vector<std::pair<std::size_t, std::uint64_t>> members; // shifts vs pivot
    };
    std::vector<Group> groups;
    for (std::size_t i = 1; i <= n; ++i) {
        bool placed = false;
        for (Group& g : groups) {
            auto e = directed_shift(orbit, pi[g.pivot], pi[i], report.charpoly);
            if (e) {
                g.members.emplace_back(i, *e);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({i, {{i, 0}}});
    }

    for (Group& g : groups) {
        // Re-reference: the class holding cell n reads best against cell n
        // itself; other classes against their lowest cell (the pivot).
        std::size_t ref = g.pivot;
        bool hasLast = std::any_of(g.members.begin(), g.members.end(),
                                   [&](const auto& m) { return m.first == n; });
        if (hasLast && g.pivot != n) {
            std::vector<std::pair<std::size_t, std::uint64_t>> rebased;
            bool ok = true;
            for (const auto& [cell, unused] : g.members) {
                (void)unused;
                auto e = directed_shift(orbit, pi[n], pi[cell], report.charpoly);
                if (!e) {
                    ok = false;
                    break;
                }
                rebased.emplace_back(cell, *e);
            }
            if (ok) {
                ref = n;
                g.members = std::move(rebased);
            }
        }
        PhaseClass cls;
        cls.reference = ref;
        cls.members = std::move(g.members);
        report.classes.push_back(std::move(cls));
        if (report.classes.back().members.size() == 1)
            report.unmatched.push_back(report.classes.back().members.front().first);
    }
    return report;
}

} // namespace sgca
