// errors.hpp — exception types thrown by the curlwave library.

#pragma once

#include <stdexcept>
#include <string>

namespace curlwave {

// Requested an eigenbasis or projection for the w = 0 subspace.
struct ZeroWaveVector : std::domain_error {
    using std::domain_error::domain_error;
};

// Material parameters outside the modeled regime (mu, eps must be > 0).
struct InvalidMedium : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two input modes share the same wavevector; amplitudes must be pre-summed.
struct DuplicateWaveVector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A mode's wavevector is not representable on the requested sampling grid.
struct OffLatticeMode : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyGrid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonFiniteSample : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Time step violates the Courant-Friedrichs-Lewy stability bound.
struct CflViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed file contents; message carries file name and line/offset.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed run configuration; message names the offending key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace curlwave
