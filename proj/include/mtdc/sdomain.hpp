#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>

namespace mtdc {

using Cplx = std::complex<double>;

// An evaluatable s-domain function (impedance or transfer function),
// composed from primitive elements and combinators. Immutable and cheap to
// copy (shared evaluation tree).
class SFunction {
 public:
  SFunction() = default;
  SFunction(std::function<Cplx(Cplx)> f, std::string desc);

  Cplx operator()(Cplx s) const;
  const std::string& describe() const { return desc_; }
  bool valid() const { return static_cast<bool>(f_); }

  static SFunction constant(double value);
  static SFunction resistor(double ohms);        // Z(s) = R
  static SFunction inductor(double henries);     // Z(s) = s L

 private:
  std::function<Cplx(Cplx)> f_;
  std::string desc_;
};

using SImpedance = SFunction;

SFunction series(const SFunction& a, const SFunction& b);
SFunction parallel(const SFunction& a, const SFunction& b);  // a b / (a + b)
SFunction add(const SFunction& a, const SFunction& b);
SFunction sub(const SFunction& a, const SFunction& b);
SFunction mul(const SFunction& a, const SFunction& b);
SFunction div(const SFunction& a, const SFunction& b);
SFunction negate(const SFunction& a);
SFunction scale(double k, const SFunction& a);

}  // namespace mtdc
