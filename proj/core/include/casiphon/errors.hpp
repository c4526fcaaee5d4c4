#pragma once

#include <stdexcept>
#include <string>

namespace casiphon {

// Base for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parameter-chain errors
class NonPositiveInput : public Error {
 public:
  using Error::Error;
};
class ZeroDetuning : public Error {
 public:
  using Error::Error;
};
class NonPositiveTemperature : public Error {
 public:
  using Error::Error;
};
class NonPositiveOccupation : public Error {
 public:
  using Error::Error;
};

// Closed-form / steady-state errors
class MarginalStability : public Error {
 public:
  using Error::Error;
};
class NegativeTime : public Error {
 public:
  using Error::Error;
};
class NoSqueezingWindow : public Error {
 public:
  using Error::Error;
};
class ZeroPopulation : public Error {
 public:
  using Error::Error;
};

// Integrator errors
class StepTooCoarse : public Error {
 public:
  using Error::Error;
};
class LostPositivity : public Error {
 public:
  explicit LostPositivity(const std::string& what, double t_first)
      : Error(what), time(t_first) {}
  double time;  // first offending time
};
class WrongBasis : public Error {
 public:
  using Error::Error;
};

// Monte-Carlo errors
class UnstableStep : public Error {
 public:
  using Error::Error;
};
class NonPsdDiffusion : public Error {
 public:
  using Error::Error;
};
class LagBeyondDuration : public Error {
 public:
  using Error::Error;
};

// Spectrum errors
class NoHalfCrossing : public Error {
 public:
  using Error::Error;
};

// Config / CLI input errors
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace casiphon
