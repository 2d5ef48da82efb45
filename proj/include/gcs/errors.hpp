#pragma once

#include <stdexcept>
#include <string>

namespace gcs {

/// Argument left the convergence domain of a non-terminating overlap series
/// (e.g. the product of coherent-state labels reached the unit-disk boundary).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Series did not reach the requested tail tolerance within max_terms.
class NonConvergenceError : public std::runtime_error {
public:
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A truncated matrix representation is too small for the requested
/// displacement: the displaced vector carries non-negligible mass in the
/// top Fock levels. Callers must raise the truncation.
class TailMassError : public std::runtime_error {
public:
    explicit TailMassError(const std::string& what) : std::runtime_error(what) {}
};

/// The south pole of the sphere has no finite projective coordinate.
class ProjectiveInfinityError : public std::domain_error {
public:
    explicit ProjectiveInfinityError(const std::string& what) : std::domain_error(what) {}
};

} // namespace gcs
