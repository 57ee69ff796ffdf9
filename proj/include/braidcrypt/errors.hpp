// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace braidcrypt {

// Base of every braidcrypt exception.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed caller input (bad words, bad parameters, bad encodings).
// The CLI maps these to exit code 2.
struct InputError : Error {
    using Error::Error;
};

// Runtime protocol or verification failure. CLI exit code 3.
struct ProtocolError : Error {
    using Error::Error;
};

struct MalformedWord : InputError {
    using InputError::InputError;
};

struct StrandMismatch : InputError {
    using InputError::InputError;
};

struct BadParameter : InputError {
    using InputError::InputError;
};

struct NotSimple : InputError {
    using InputError::InputError;
};

struct OddShiftUnsupported : InputError {
    using InputError::InputError;
};

// No positive complement exists: requested power is below sup(x).
struct ComplementTooSmall : InputError {
    using InputError::InputError;
};

// 2k (resp. 2h, 2d) is below sup of the sampled secret. Carries the least
// exponent half that would have worked.
struct ExponentTooSmall : InputError {
    ExponentTooSmall(const std::string& msg, int min_half)
        : InputError(msg), min_half_exponent(min_half) {}
    int min_half_exponent;
};

struct WrongRole : InputError {
    using InputError::InputError;
};

struct EncodingOverflow : InputError {
    using InputError::InputError;
};

struct BadMagic : InputError {
    using InputError::InputError;
};

struct Truncated : InputError {
    using InputError::InputError;
};

struct InvalidNormalForm : InputError {
    using InputError::InputError;
};

struct ProtocolCorrupt : ProtocolError {
    using ProtocolError::ProtocolError;
};

struct CiphertextCorrupt : ProtocolError {
    using ProtocolError::ProtocolError;
};

struct ReductionFailed : ProtocolError {
    using ProtocolError::ProtocolError;
};

}  // namespace braidcrypt
