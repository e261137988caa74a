#include "mtdc/sdomain.hpp"

#include <utility>

namespace mtdc {

SFunction::SFunction(std::function<Cplx(Cplx)> f, std::string desc)
    : f_(std::move(f)), desc_(std::move(desc)) {}

Cplx SFunction::operator()(Cplx s) const { return f_(s); }

SFunction SFunction::constant(double value) {
  return {[value](Cplx) { return Cplx(value, 0.0); }, std::to_string(value)};
}

SFunction SFunction::resistor(double ohms) { return constant(ohms); }

SFunction SFunction::inductor(double henries) {
  return {[henries](Cplx s) { return s * henries; },
          std::to_string(henries) + "s"};
}

SFunction series(const SFunction& a, const SFunction& b) { return add(a, b); }

SFunction parallel(const SFunction& a, const SFunction& b) {
  auto fa = a, fb = b;
  return {[fa, fb](Cplx s) {
            const Cplx za = fa(s), zb = fb(s);
            const Cplx sum = za + zb;
            if (sum == Cplx(0.0, 0.0)) return Cplx(0.0, 0.0);
            return za * zb / sum;
          },
          "(" + a.describe() + " || " + b.describe() + ")"};
}

SFunction add(const SFunction& a, const SFunction& b) {
  auto fa = a, fb = b;
  return {[fa, fb](Cplx s) { return fa(s) + fb(s); },
          "(" + a.describe() + " + " + b.describe() + ")"};
}

SFunction sub(const SFunction& a, const SFunction& b) {
  auto fa = a, fb = b;
  return {[fa, fb](Cplx s) { return fa(s) - fb(s); },
          "(" + a.describe() + " - " + b.describe() + ")"};
}

SFunction mul(const SFunction& a, const SFunction& b) {
  auto fa = a, fb = b;
  return {[fa, fb](Cplx s) { return fa(s) * fb(s); },
          "(" + a.describe() + " * " + b.describe() + ")"};
}

SFunction div(const SFunction& a, const SFunction& b) {
  auto fa = a, fb = b;
  return {[fa, fb](Cplx s) { return fa(s) / fb(s); },
          "(" + a.describe() + " / " + b.describe() + ")"};
}

SFunction negate(const SFunction& a) {
  auto fa = a;
  return {[fa](Cplx s) { return -fa(s); }, "-" + a.describe()};
}

SFunction scale(double k, const SFunction& a) {
  auto fa = a;
  return {[k, fa](Cplx s) { return k * fa(s); },
          std::to_string(k) + "*" + a.describe()};
}

}  // namespace mtdc
