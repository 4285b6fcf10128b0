#pragma once

// Pole/weight form of an approximant: R(x) = sum_i c_i / (x - r_i), with the
// r_i the roots of q. The scaling's power of x cancels against p's vanishing
// low coefficients, so the origin is never a pole.

#include <complex>
#include <vector>

#include "mlpade/errors.hpp"
#include "mlpade/pade.hpp"
#include "mlpade/poly.hpp"

namespace mlpade {

struct PoleWeight {
  cdouble pole;
  cdouble weight;
};

class PartialFractionForm {
 public:
  const ApproximantSpec& spec() const { return spec_; }

  /// One entry per conjugate pair (Im pole > 0) when pairing_ok, otherwise
  /// every pole.
  const std::vector<PoleWeight>& terms() const { return terms_; }
  /// Every pole with its weight, conjugates included.
  const std::vector<PoleWeight>& all_terms() const { return all_; }
  bool pairing_ok() const { return pairing_ok_; }

  double operator()(double x) const { return eval(x); }

  double eval(double x) const {
    if (!pairing_ok_) return full_sum(x).real();
    double acc = 0.0;
    for (const auto& t : terms_) acc += 2.0 * (t.weight / (x - t.pole)).real();
    return acc;
  }

  /// Sum over all poles without pairing; its imaginary part is rounding only.
  cdouble full_sum(double x) const {
    cdouble acc = 0.0;
    for (const auto& t : all_) acc += t.weight / (x - t.pole);
    return acc;
  }

 private:
  friend PartialFractionForm decompose_rational(const ApproximantSpec&, const RealPoly&,
                                                const RealPoly&, double, bool);

  explicit PartialFractionForm(ApproximantSpec s) : spec_(s) {}

  ApproximantSpec spec_;
  std::vector<PoleWeight> terms_;
  std::vector<PoleWeight> all_;
  bool pairing_ok_ = false;
};

/// Decomposes numerator / (scale * denominator), deg numerator < deg
/// denominator, denominator with simple roots. Weights are the residues
/// numerator(r) / (scale * denominator'(r)). When the poles do not come in
/// conjugate pairs the form falls back to the unpaired sum; with strict set
/// that throws Errc::UnpairedPoles instead.
inline PartialFractionForm decompose_rational(const ApproximantSpec& spec, const RealPoly& numerator,
                                              const RealPoly& denominator, double scale,
                                              bool strict = false) {
  const auto rs = roots(denominator).roots;
  double biggest = 0.0;
  for (const auto& z : rs) biggest = std::max(biggest, std::abs(z));
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      if (std::abs(rs[i] - rs[j]) <= 1e-8 * (1.0 + biggest)) {
        throw Error(Errc::RepeatedPoles, "decompose: denominator roots are not simple",
                    std::abs(rs[i] - rs[j]), rs);
      }
    }
  }
  for (const auto& z : rs) {
    const double dist = z.real() >= 0.0 ? std::abs(z.imag()) : std::abs(z);
    if (dist <= 1e-8) {
      throw Error(Errc::RealPositivePole, "decompose: a pole lies on [0, inf)", z.real(), rs);
    }
  }

  PartialFractionForm f(spec);
  const RealPoly dq = denominator.derivative();
  for (const auto& z : rs) {
    const cdouble w = numerator(z) / (scale * dq(z));
    f.all_.push_back({z, w});
  }

  bool paired = true;
  std::vector<bool> used(rs.size(), false);
  for (std::size_t i = 0; i < rs.size() && paired; ++i) {
    if (used[i]) continue;
    if (std::abs(rs[i].imag()) <= pairing_tolerance(rs[i])) {
      paired = false;
      break;
    }
    std::size_t mate = rs.size();
    for (std::size_t j = 0; j < rs.size(); ++j) {
      if (j != i && !used[j] && is_conjugate_pair(rs[i], rs[j])) {
        mate = j;
        break;
      }
    }
    if (mate == rs.size()) {
      paired = false;
      break;
    }
    used[i] = used[mate] = true;
    const std::size_t up = rs[i].imag() > 0.0 ? i : mate;
    f.terms_.push_back(f.all_[up]);
  }

  if (!paired) {
    if (strict) {
      throw Error(Errc::UnpairedPoles, "decompose: poles are not in conjugate pairs", 0.0, rs);
    }
    f.terms_ = f.all_;
  }
  f.pairing_ok_ = paired;
  return f;
}

/// Pole/weight form of R itself: the reduced numerator over c q.
inline PartialFractionForm decompose(const RationalApproximant& r, bool strict = false) {
  return decompose_rational(r.spec(), r.reduced_numerator(), r.q(), r.scaling_constant(), strict);
}

}  // namespace mlpade
