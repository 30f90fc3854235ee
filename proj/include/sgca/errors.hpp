#pragma once

#include <stdexcept>
#include <string>

namespace sgca {

// Failure modes of analysis routines: conditions in the input *data* (as
// opposed to malformed arguments, which raise std::invalid_argument).
enum class AnalysisFault {
    ModelMismatch,        // no candidate model hosts the observed window
    InsufficientData,     // window too short / search bound exceeded
    StalledGenerator,     // control register seeded with all zeros
    VerificationMismatch, // recovered state fails to reproduce the window
    DegenerateCoset,      // conjugate coset smaller than the register length
    ZeroOperator,         // transfer polynomial vanishes mod the charpoly
};

class AnalysisError : public std::runtime_error {
public:
    AnalysisError(AnalysisFault fault, const std::string& message)
        : std::runtime_error(message), fault_(fault) {}

    AnalysisFault fault() const { return fault_; }

private:
    AnalysisFault fault_;
};

} // namespace sgca
