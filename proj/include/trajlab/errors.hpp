#pragma once

#include <stdexcept>
#include <string>

namespace trajlab {

// Base of every error thrown by the library. The immediate subclasses group
// errors by the CLI exit code they map to: ConfigError -> 2, IoError -> 3,
// DataError -> 4, NumericError -> 5.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct DataError : Error {
    using Error::Error;
};
struct NumericError : Error {
    using Error::Error;
};

#define TRAJLAB_ERROR(Name, Base)                                   \
    struct Name : Base {                                            \
        explicit Name(const std::string& msg) : Base(#Name ": " + msg) {} \
    }

// numcore
TRAJLAB_ERROR(LengthMismatch, DataError);
TRAJLAB_ERROR(ZeroVariance, DataError);
TRAJLAB_ERROR(AllTied, DataError);
TRAJLAB_ERROR(NotSymmetric, DataError);
TRAJLAB_ERROR(DimensionMismatch, DataError);
TRAJLAB_ERROR(InvalidBeta, ConfigError);
TRAJLAB_ERROR(TooShort, DataError);
TRAJLAB_ERROR(NonFiniteInput, DataError);
TRAJLAB_ERROR(NotPositiveDefinite, NumericError);

// encoding
TRAJLAB_ERROR(SingularSystem, NumericError);
TRAJLAB_ERROR(InsufficientSamples, DataError);

// repsim
TRAJLAB_ERROR(ShapeMismatch, DataError);
TRAJLAB_ERROR(AllColumnsDegenerate, DataError);
TRAJLAB_ERROR(SizeMismatch, DataError);
TRAJLAB_ERROR(DegenerateRDM, DataError);
TRAJLAB_ERROR(ZeroMatrix, DataError);
TRAJLAB_ERROR(WindowTooLarge, DataError);

// ltc
TRAJLAB_ERROR(TooFewSteps, DataError);
TRAJLAB_ERROR(ZeroState, DataError);
TRAJLAB_ERROR(ZeroTrace, DataError);
TRAJLAB_ERROR(NoValidPairs, DataError);
TRAJLAB_ERROR(DegenerateVariance, DataError);

// ingest
TRAJLAB_ERROR(BadMagic, IoError);
TRAJLAB_ERROR(ChecksumMismatch, IoError);
TRAJLAB_ERROR(TruncatedFile, IoError);
TRAJLAB_ERROR(MissingFile, IoError);
TRAJLAB_ERROR(WriteFailure, IoError);
TRAJLAB_ERROR(DimMismatch, DataError);
TRAJLAB_ERROR(DuplicateIds, DataError);
TRAJLAB_ERROR(InvalidConfig, ConfigError);

#undef TRAJLAB_ERROR

}  // namespace trajlab
