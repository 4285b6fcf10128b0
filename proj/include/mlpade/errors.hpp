#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mlpade {

enum class Errc {
  InvalidSpec,
  IllConditioned,
  PoleOnPositiveAxis,
  Singular,
  NonConvergence,
  Overflow,
  NumeratorPole,
  RepeatedPoles,
  RealPositivePole,
  UnpairedPoles,
  PairingUnavailable,
  DomainError,
  NegativeDiscriminant,
  NoPositiveRoot,
  MultiplePositiveRoots,
  PrecisionLoss,
  ContourFailure,
};

inline const char* to_string(Errc code) {
  switch (code) {
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::IllConditioned: return "IllConditioned";
    case Errc::PoleOnPositiveAxis: return "PoleOnPositiveAxis";
    case Errc::Singular: return "Singular";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::Overflow: return "Overflow";
    case Errc::NumeratorPole: return "NumeratorPole";
    case Errc::RepeatedPoles: return "RepeatedPoles";
    case Errc::RealPositivePole: return "RealPositivePole";
    case Errc::UnpairedPoles: return "UnpairedPoles";
    case Errc::PairingUnavailable: return "PairingUnavailable";
    case Errc::DomainError: return "DomainError";
    case Errc::NegativeDiscriminant: return "NegativeDiscriminant";
    case Errc::NoPositiveRoot: return "NoPositiveRoot";
    case Errc::MultiplePositiveRoots: return "MultiplePositiveRoots";
    case Errc::PrecisionLoss: return "PrecisionLoss";
    case Errc::ContourFailure: return "ContourFailure";
  }
  return "Unknown";
}

/// Every failure raised by the library. `roots()` carries the polynomial
/// roots for the root-selection and pole-pairing failures; `value()` carries
/// a scalar diagnostic (condition estimate, residual, ...) where one exists.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, double value = 0.0,
        std::vector<std::complex<double>> roots = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        value_(value),
        roots_(std::move(roots)) {}

  Errc code() const noexcept { return code_; }
  double value() const noexcept { return value_; }
  const std::vector<std::complex<double>>& roots() const noexcept { return roots_; }

 private:
  Errc code_;
  double value_;
  std::vector<std::complex<double>> roots_;
};

}  // namespace mlpade
