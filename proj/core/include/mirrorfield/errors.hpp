#pragma once

#include <stdexcept>

namespace mirrorfield {

// Argument outside its documented domain.
class OutOfRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Scattering phases do not sum to an odd multiple of pi.
class PhaseConditionViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exactly one reflectance is zero; the normalization factors diverge.
class OneSidedMirror : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Both reflectances are zero; there is no mirror to normalize against.
class FreeSpaceDegenerate : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NonMonotonicGrid : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class QuadratureNotConverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A packet's support left the simulation window.
class GridOverrun : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A packet's initial support contradicts its origin-side label.
class SideMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Packet supports still straddle the mirror plane at the audit time.
class ScatteringIncomplete : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mirrorfield
