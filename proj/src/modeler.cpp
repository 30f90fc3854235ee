#include "sgca/modeler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sgca/errors.hpp"

namespace sgca {

BitPoly ca_charpoly(const RuleVector& rules) {
    BitPoly prev = BitPoly::one(); // Delta_0
    BitPoly cur = BitPoly::zero(); // becomes Delta_1 in the first iteration
    const BitPoly d = BitPoly::monomial(1);
    for (std::size_t k = 1; k <= rules.size(); ++k) {
        BitPoly term = d;
        if (rules.self_term(k)) term += BitPoly::one();
        if (k == 1) {
            cur = term;
        } else {
            BitPoly next = term * cur + prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
    }
    return rules.size() == 0 ? prev : cur;
}

BitPoly coset_polynomial(const BitPoly& p2, unsigned l1) {
    auto deg = p2.degree();
    if (!deg || *deg < 1) throw std::invalid_argument("P2 must have degree >= 1");
    if (l1 < 1 || l1 > 63) throw std::invalid_argument("L1 must be between 1 and 63");
    if (!is_primitive(p2)) throw std::invalid_argument("P2 must be primitive");
    unsigned l2 = *deg;

    FieldContext ctx(p2);
    std::uint64_t group = (l2 == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << l2) - 1;
    std::uint64_t e = (std::uint64_t{1} << l1) - 1;
    if (l2 < 64) {
        e %= group;
        if (e == 0) {
            // alpha^E == 1: the coset collapses to a single element.
            throw AnalysisError(AnalysisFault::DegenerateCoset,
                                "selection exponent is a multiple of the group order");
        }
    }
    BitPoly result = minimal_polynomial_of_power(ctx, e);
    if (result.degree_or0() != l2)
        throw AnalysisError(AnalysisFault::DegenerateCoset,
                            "conjugate coset smaller than the register length");
    if (std::gcd(static_cast<unsigned long>(l1), static_cast<unsigned long>(l2)) == 1 &&
        !is_primitive(result))
        throw std::logic_error("coset polynomial unexpectedly non-primitive");
    return result;
}

namespace {

// Continued-fraction read-off: expand p/b; succeed iff every quotient has
// degree exactly 1 and the remainder chain ends at gcd 1 after deg(p) steps.
// Quotient k's constant term is cell k's self term.
bool rules_from_convergents(const BitPoly& p, const BitPoly& b, std::string& rules) {
    rules.clear();
    BitPoly r0 = p, r1 = b;
    while (!r1.is_zero()) {
        auto [q, r2] = BitPoly::divmod(r0, r1);
        if (q.degree_or0() != 1) return false;
        rules += q.coeff(0) ? '1' : '0';
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return rules.size() == p.degree_or0() && r0 == BitPoly::one();
}

std::vector<RuleVector> synthesize_by_moment_system(const BitPoly& p) {
    unsigned n = p.degree_or0();
    // Unknowns c_0..c_{n-1}; represent each moment c_t (t < 2n) as a GF(2)
    // linear form over the unknowns, extended through the recurrence
    // c_{t+n} = sum_{k<n} p_k c_{t+k}.
    std::vector<std::uint64_t> form(2 * n);
    for (unsigned t = 0; t < n; ++t) form[t] = std::uint64_t{1} << t;
    for (unsigned t = 0; t + n < 2 * n; ++t) {
        std::uint64_t f = 0;
        for (unsigned k = 0; k < n; ++k)
            if (p.coeff(k)) f ^= form[t + k];
        form[t + n] = f;
    }

    // Conditions: c_0 = 1 and c_{2j} + c_{2j-1} + c_{j-1} = 0 for 1 <= j < n.
    struct Row {
        std::uint64_t lhs;
        unsigned rhs;
    };
    std::vector<Row> rows;
    rows.push_back({form[0], 1});
    for (unsigned j = 1; j < n; ++j)
        rows.push_back({form[2 * j - 1] ^ form[2 * j] ^ form[j - 1], 0});

    // Reduced row echelon form over the n unknowns.
    std::vector<int> pivotOfCol(n, -1);
    std::vector<Row> reduced;
    for (Row row : rows) {
        for (unsigned c = 0; c < n; ++c)
            if ((row.lhs >> c & 1) && pivotOfCol[c] >= 0) {
                row.lhs ^= reduced[static_cast<std::size_t>(pivotOfCol[c])].lhs;
                row.rhs ^= reduced[static_cast<std::size_t>(pivotOfCol[c])].rhs;
            }
        if (row.lhs == 0) {
            if (row.rhs) return {}; // inconsistent: no valid moment sequence
            continue;
        }
        unsigned c = static_cast<unsigned>(__builtin_ctzll(row.lhs));
        // Keep earlier pivot rows clear of the new pivot column.
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (reduced[i].lhs >> c & 1) {
                reduced[i].lhs ^= row.lhs;
                reduced[i].rhs ^= row.rhs;
            }
        pivotOfCol[c] = static_cast<int>(reduced.size());
        reduced.push_back(row);
    }

    std::vector<unsigned> freeCols;
    for (unsigned c = 0; c < n; ++c)
        if (pivotOfCol[c] < 0) freeCols.push_back(c);
    if (freeCols.size() > 12)
        throw std::logic_error("moment system unexpectedly underdetermined");

    std::vector<RuleVector> found;
    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << freeCols.size()); ++assign) {
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < freeCols.size(); ++i)
            if (assign >> i & 1) c |= std::uint64_t{1} << freeCols[i];
        for (unsigned col = 0; col < n; ++col) {
            if (pivotOfCol[col] < 0) continue;
            const Row& row = reduced[static_cast<std::size_t>(pivotOfCol[col])];
            unsigned v = row.rhs ^ static_cast<unsigned>(__builtin_popcountll(row.lhs & c) & 1);
            // The pivot column itself is part of lhs; remove its contribution.
            v ^= static_cast<unsigned>(c >> col & 1);
            if (v) c |= std::uint64_t{1} << col;
        }
        // B = sum over t with c_t = 1 of (p >> (t+1)): the polynomial part of
        // p times the moment series.
        BitPoly b;
        for (unsigned t = 0; t < n; ++t)
            if (c >> t & 1) b += p >> (t + 1);
        std::string rules;
        if (!rules_from_convergents(p, b, rules)) continue;
        RuleVector rv{rules};
        if (ca_charpoly(rv) == p) found.push_back(std::move(rv));
    }
    return found;
}

std::vector<RuleVector> synthesize_exhaustive(const BitPoly& p) {
    unsigned n = p.degree_or0();
    if (n > 24) return {};
    std::vector<RuleVector> found;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::string rules(n, '0');
        for (unsigned i = 0; i < n; ++i)
            if (bits >> i & 1) rules[i] = '1';
        RuleVector rv{rules};
        if (ca_charpoly(rv) == p) found.push_back(std::move(rv));
    }
    return found;
}

} // namespace

std::pair<RuleVector, RuleVector> synthesize_ca(const BitPoly& p) {
    auto deg = p.degree();
    if (!deg || *deg < 1) throw std::invalid_argument("automaton synthesis needs degree >= 1");
    if (*deg > 64) throw std::invalid_argument("automaton synthesis supports degree <= 64");
    if (!is_irreducible(p))
        throw std::invalid_argument("automaton synthesis requires an irreducible polynomial");

    std::vector<RuleVector> found = synthesize_by_moment_system(p);
    if (found.empty()) found = synthesize_exhaustive(p);
    if (found.empty()) throw std::logic_error("no automaton found for an irreducible polynomial");

    // The mirror image is always valid too (the continuant is reversal-
    // invariant); make sure both ends of the pair are present, then order.
    std::vector<std::string> texts;
    for (const RuleVector& rv : found) {
        texts.push_back(rv.text());
        texts.push_back(rv.reversed().text());
    }
    std::sort(texts.begin(), texts.end());
    texts.erase(std::unique(texts.begin(), texts.end()), texts.end());
    if (texts.size() > 2) throw std::logic_error("more than two automata for an irreducible polynomial");
    if (texts.size() == 1) return {RuleVector(texts[0]), RuleVector(texts[0])};
    return {RuleVector(texts[0]), RuleVector(texts[1])};
}

RuleVector expand_once(const RuleVector& rules) {
    std::string s = rules.text();
    s.back() = s.back() == '1' ? '0' : '1';
    std::string mirrored(s.rbegin(), s.rend());
    return RuleVector(s + mirrored);
}

std::pair<RuleVector, RuleVector> model_sg(unsigned l1, const BitPoly& p2) {
    if (l1 < 1) throw std::invalid_argument("L1 must be at least 1");
    BitPoly p = coset_polynomial(p2, l1);
    auto [a, b] = synthesize_ca(p);
    for (unsigned i = 1; i < l1; ++i) {
        a = expand_once(a);
        b = expand_once(b);
    }
    // Desk-scale sanity check; skipped for very long vectors where the
    // quadratic continuant recurrence would dominate the whole run.
    if (a.size() <= 4096) {
        BitPoly want = p.pow(std::uint64_t{1} << (l1 - 1));
        if (!(ca_charpoly(a) == want) || !(ca_charpoly(b) == want))
            throw std::logic_error("expanded automaton lost the required characteristic polynomial");
    }
    if (b.text() < a.text()) std::swap(a, b);
    return {a, b};
}

} // namespace sgca
