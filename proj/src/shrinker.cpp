#include "sgca/shrinker.hpp"

#include <numeric>
#include <stdexcept>

#include "sgca/errors.hpp"
#include "sgca/field.hpp"
#include "sgca/modeler.hpp"

namespace sgca {

BitSeq shrink_streams(const BitSeq& a, const BitSeq& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("control and data streams must have equal length");
    BitSeq out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) out.push_back(b[i]);
    return out;
}

ShrinkingGenerator::ShrinkingGenerator(Lfsr control, Lfsr data)
    : control_(std::move(control)), data_(std::move(data)) {
    if (!is_primitive(control_.feedback()))
        throw std::invalid_argument("control feedback polynomial must be primitive");
    if (!is_primitive(data_.feedback()))
        throw std::invalid_argument("data feedback polynomial must be primitive");
    if (std::gcd(control_.length(), data_.length()) != 1)
        throw std::invalid_argument("register lengths must be coprime");
}

BitSeq ShrinkingGenerator::generate(std::size_t n) {
    if (n > 0 && control_.state_is_zero())
        throw AnalysisError(AnalysisFault::StalledGenerator,
                            "control register is all zeros and never selects a bit");
    BitSeq out;
    out.reserve(n);
    while (out.size() < n) {
        Bit sel = control_.step();
        Bit bit = data_.step();
        if (sel) out.push_back(bit);
    }
    return out;
}

SgPrediction sg_predict(unsigned l1, unsigned l2, const BitPoly& p2) {
    if (l1 < 2) throw std::invalid_argument("forecast requires a control register of length >= 2");
    auto deg = p2.degree();
    if (!deg || *deg != l2)
        throw std::invalid_argument("P2 degree must equal the stated data register length");
    if (l1 + l2 - 1 > 64) throw std::invalid_argument("L1 + L2 - 1 must be at most 64");
    if (!is_primitive(p2)) throw std::invalid_argument("P2 must be primitive");
    if (std::gcd(l1, l2) != 1) throw std::invalid_argument("register lengths must be coprime");

    SgPrediction out;
    out.period = ((std::uint64_t{1} << l2) - 1) << (l1 - 1);
    out.ones_per_period = std::uint64_t{1} << (l2 - 1 + l1 - 1);
    out.lc_lower = static_cast<std::uint64_t>(l2) << (l1 - 2);
    out.lc_upper = static_cast<std::uint64_t>(l2) << (l1 - 1);
    out.p = coset_polynomial(p2, l1);
    out.n_lower = std::uint64_t{1} << (l1 - 2);
    out.n_upper = std::uint64_t{1} << (l1 - 1);
    return out;
}

bool verify_annihilator(const BitSeq& s, const BitPoly& p, unsigned l1) {
    if (p.is_zero()) throw std::invalid_argument("annihilator factor must be nonzero");
    if (l1 < 1 || l1 > 64) throw std::invalid_argument("L1 must be between 1 and 64");
    BitPoly q = p.pow(std::uint64_t{1} << (l1 - 1));
    unsigned d = q.degree_or0();
    if (s.size() < static_cast<std::size_t>(d) + 1)
        throw AnalysisError(AnalysisFault::InsufficientData,
                            "window shorter than the annihilator span");
    std::vector<unsigned> exps;
    for (unsigned k = 0; k <= d; ++k)
        if (q.coeff(k)) exps.push_back(k);
    for (std::size_t t = 0; t + d < s.size(); ++t) {
        Bit acc = 0;
        for (unsigned k : exps) acc ^= s[t + k];
        if (acc) return false;
    }
    return true;
}

} // namespace sgca
