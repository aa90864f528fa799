#pragma once

#include <stdexcept>
#include <string>

namespace replic {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (sample budget, range, ...).
class parameter_error : public error {
 public:
  using error::error;
};

/// Malformed or out-of-contract input data (bad category index, inconsistent
/// labels, non-finite values).
class data_error : public error {
 public:
  using error::error;
};

/// A learner received an oracle built on the wrong randomness channel.
class channel_error : public error {
 public:
  using error::error;
};

/// The OWS learner's explicit FAILURE branch (smallest positive index not
/// below the estimated threshold). Counts against the confidence budget.
class ows_failure : public error {
 public:
  using error::error;
};

/// A GF(2) system had no solution, i.e. the data was not realizable.
class inconsistent_system : public data_error {
 public:
  using data_error::data_error;
};

/// The affine-parity learner could not collect d independent offsets within
/// its draw budget.
class insufficient_rank : public error {
 public:
  using error::error;
};

/// The DP-to-replicable transformation would need more candidate draws than
/// the configured cap allows.
class representation_blowup : public parameter_error {
 public:
  using parameter_error::parameter_error;
};

}  // namespace replic
