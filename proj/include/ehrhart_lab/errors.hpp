#pragma once

#include <stdexcept>
#include <string>

namespace ehrhart_lab {

// ValidationError: caused by bad user input / inadmissible parameters (CLI exit 2).
// InternalError: indicates an implementation bug or an impossible state (CLI exit 1).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidParameter : ValidationError {
    using ValidationError::ValidationError;
};
struct ZeroVector : ValidationError {
    using ValidationError::ValidationError;
};
struct NonLatticeBase : ValidationError {
    using ValidationError::ValidationError;
};
struct NotAdmissible : ValidationError {
    using ValidationError::ValidationError;
};
struct SearchExhausted : ValidationError {
    using ValidationError::ValidationError;
};
struct OriginNotInterior : ValidationError {
    using ValidationError::ValidationError;
};
struct NoLatticeVertex : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidWord : ValidationError {
    using ValidationError::ValidationError;
};
struct OriginOnPath : ValidationError {
    using ValidationError::ValidationError;
};

struct FitVerificationFailure : InternalError {
    using InternalError::InternalError;
};
struct ConvexityFailure : InternalError {
    using InternalError::InternalError;
};
struct DegenerateSplit : InternalError {
    using InternalError::InternalError;
};

} // namespace ehrhart_lab
