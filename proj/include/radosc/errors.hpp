#pragma once

#include <stdexcept>
#include <string>

namespace radosc {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameter hits a pole (e.g. 1F1 with c a non-positive integer, tan at pi/2).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Ladder operator pushed a ket outside the physical lattice (l < 0).
class UnphysicalState : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series did not meet its tolerance within the allowed number of terms.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace radosc
