#include "sgca/attack.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgca/errors.hpp"
#include "sgca/modeler.hpp"

namespace sgca {

std::vector<BitSeq> recover_triangle(const RuleVector& rules, const BitSeq& window) {
    std::size_t n = rules.size();
    if (window.size() != n)
        throw std::invalid_argument("window length must equal the automaton length");

    // col[j] = cell j's values at times 0..j-1 (1-based cells; col[n+1] is
    // the null boundary).
    std::vector<BitSeq> col(n + 2);
    col[n] = window;
    for (std::size_t j = n; j-- > 1;) {
        const BitSeq& right = col[j + 1];
        const BitSeq& rightright = col[j + 2];
        Bit d = rules.self_term(j + 1) ? 1 : 0;
        col[j].resize(right.size() - 1);
        for (std::size_t t = 0; t + 1 < right.size(); ++t) {
            Bit v = static_cast<Bit>(right[t + 1] ^ (d & right[t]));
            if (t < rightright.size()) v ^= rightright[t];
            col[j][t] = v;
        }
    }

    std::vector<BitSeq> rows(n);
    for (std::size_t t = 0; t < n; ++t) {
        rows[t].resize(n - t);
        for (std::size_t j = t + 1; j <= n; ++j) rows[t][j - t - 1] = col[j][t];
    }
    return rows;
}

CaState recover_state(const RuleVector& rules, const BitSeq& window) {
    return recover_triangle(rules, window).front();
}

BitSeq recover_keystream(const RuleVector& rules, const BitSeq& window, std::size_t horizon) {
    std::size_t n = rules.size();
    if (window.size() < n)
        throw AnalysisError(AnalysisFault::InsufficientData,
                            "window shorter than the automaton length");
    BitSeq head(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(n));
    CaState state = recover_state(rules, head);
    BitSeq trace = cell_trace(rules, state, n, std::max(horizon, window.size()));
    for (std::size_t i = 0; i < window.size(); ++i)
        if (trace[i] != window[i])
            throw AnalysisError(AnalysisFault::VerificationMismatch,
                                "recovered state fails to reproduce the window");
    trace.resize(horizon);
    return trace;
}

AttackReport attack_sg(unsigned l1, const BitPoly& p2, const BitSeq& window,
                       std::size_t horizon) {
    auto deg = p2.degree();
    if (!deg || *deg < 1) throw std::invalid_argument("P2 must have degree >= 1");
    if (l1 < 1) throw std::invalid_argument("L1 must be at least 1");
    std::size_t n = static_cast<std::size_t>(*deg) << (l1 - 1);
    if (window.size() < n)
        throw AnalysisError(AnalysisFault::InsufficientData,
                            "window shorter than the automaton length");

    struct Candidate {
        RuleVector rules;
        std::string orientation;
        std::string variant;
        BitPoly p;
    };
    std::vector<Candidate> candidates;
    std::vector<std::string> seen; // effective rule texts already queued
    auto queue_model = [&](const std::pair<RuleVector, RuleVector>& pair,
                           const BitPoly& p, const std::string& variant) {
        for (const char* orientation : {"rightmost", "leftmost"}) {
            for (const RuleVector* rv : {&pair.first, &pair.second}) {
                // A window at the leftmost cell of rv reads as a window at
                // the rightmost cell of the reversed vector.
                RuleVector eff = orientation == std::string("rightmost") ? *rv : rv->reversed();
                if (std::find(seen.begin(), seen.end(), eff.text()) != seen.end()) continue;
                seen.push_back(eff.text());
                candidates.push_back({eff, orientation, variant, p});
            }
        }
    };
    {
        auto direct = model_sg(l1, p2);
        queue_model(direct, coset_polynomial(p2, l1), "direct");
        BitPoly recip = p2.reversed();
        auto mirror = model_sg(l1, recip);
        queue_model(mirror, coset_polynomial(recip, l1), "reciprocal");
    }

    bool zeroWindow = std::all_of(window.begin(), window.end(), [](Bit b) { return b == 0; });
    for (const Candidate& cand : candidates) {
        BitSeq head(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(n));
        CaState state = recover_state(cand.rules, head);
        BitSeq trace = cell_trace(cand.rules, state, n, std::max(horizon, window.size()));
        if (!std::equal(window.begin(), window.end(), trace.begin())) continue;

        AttackReport report;
        report.ca_rules = cand.rules.text();
        report.orientation = cand.orientation;
        report.variant = cand.variant;
        report.p_used = cand.p;
        report.state = std::move(state);
        report.bits_required = n;
        report.bm_equivalent = 2 * n;
        if (horizon > 0) {
            trace.resize(horizon);
            report.keystream = std::move(trace);
        }
        report.degenerate = zeroWindow;
        return report;
    }
    throw AnalysisError(AnalysisFault::ModelMismatch,
                        "no candidate automaton reproduces the window");
}

} // namespace sgca
