#ifndef ENTRYWISE_TOLERANCES_HPP
#define ENTRYWISE_TOLERANCES_HPP

#include <stdexcept>

namespace entrywise {

/// Named tolerances used by every floating-point decision in the library.
///
/// psdFloor and rankGap are relative (scaled by max(1, lambda_max)),
/// rowEq and strictMargin are absolute, reconstructionTol/orthogonalityTol
/// are relative residual bounds for the eigensolver contract.
struct ToleranceProfile {
    double psdFloor = 1e-9;
    double rankGap = 1e-8;
    double rowEq = 1e-10;
    double strictMargin = 1e-12;
    double reconstructionTol = 1e-10;
    double orthogonalityTol = 1e-10;

    void validate() const {
        if (psdFloor <= 0 || rankGap <= 0 || rowEq <= 0 || strictMargin <= 0 ||
            reconstructionTol <= 0 || orthogonalityTol <= 0) {
            throw std::invalid_argument("ToleranceProfile: all tolerances must be strictly positive");
        }
    }
};

} // namespace entrywise

#endif // ENTRYWISE_TOLERANCES_HPP
