#ifndef TREEHEIGHT_ERRORS_HPP
#define TREEHEIGHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace treeheight {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyDegreeSet : Error {
    EmptyDegreeSet() : Error("degree set is empty") {}
};

struct NonPositiveDegree : Error {
    explicit NonPositiveDegree(long d)
        : Error("degree set contains non-positive element " + std::to_string(d)) {}
};

struct DivisionByZeroRatFunc : Error {
    DivisionByZeroRatFunc() : Error("division by the zero rational function") {}
};

struct FamilyMismatch : Error {
    FamilyMismatch() : Error("field elements belong to different tree families") {}
};

struct ZeroInversion : Error {
    ZeroInversion() : Error("attempted to invert the zero field element") {}
};

// The modulus Q(x,F) admitted a nontrivial common factor during extended
// Euclid; the quotient ring is not a field for this input.  Callers fall
// back to the numeric series pipeline.
struct ReducibleModulus : Error {
    explicit ReducibleModulus(const std::string& detail)
        : Error("modulus Q is reducible: " + detail) {}
};

struct NonUnitSeries : Error {
    NonUnitSeries() : Error("series has zero constant term, not invertible") {}
};

struct NotAPowerSeries : Error {
    explicit NotAPowerSeries(const std::string& detail)
        : Error("expression has a pole at x=0: " + detail) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& detail)
        : Error("index out of range: " + detail) {}
};

struct EmptySampleSpace : Error {
    EmptySampleSpace() : Error("no trees at this size (N_0 = 0)") {}
};

struct DegenerateDistribution : Error {
    DegenerateDistribution() : Error("variance is zero, scaled moments undefined") {}
};

struct InsufficientSamples : Error {
    explicit InsufficientSamples(std::size_t got)
        : Error("need at least 4 samples for extrapolation, got " + std::to_string(got)) {}
};

struct CapExceeded : Error {
    CapExceeded(long n, long cap)
        : Error("enumeration size " + std::to_string(n) + " exceeds cap " +
                std::to_string(cap)) {}
};

}  // namespace treeheight

#endif
