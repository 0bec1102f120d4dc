#include "ordent/composition.hpp"

#include <cmath>
#include <stdexcept>

#include "ordent/lambert.hpp"

namespace ordent {

namespace {

double xlogx1(double x) {
  if (!(x >= 0.0)) throw std::domain_error("composition law needs non-negative arguments");
  return (x + 1.0) * std::log1p(x);
}

}  // namespace

CompositionLaw composition_law_for(const ComplexityClass& cls) {
  switch (cls.kind()) {
    case ComplexityClass::Kind::kExponential:
      return CompositionLaw("additive", [](double x, double y) { return x + y; });
    case ComplexityClass::Kind::kFactorial:
    case ComplexityClass::Kind::kSubFactorial:
      return CompositionLaw("factorial", [](double x, double y) {
        return std::expm1(lambert_w0(xlogx1(x) + xlogx1(y)));
      });
    case ComplexityClass::Kind::kCustom:
      break;
  }
  const double t0 = cls.inverse_at_zero();
  return CompositionLaw(cls.name(), [cls, t0](double x, double y) {
    return cls.g_inverse(cls.g(x + t0) + cls.g(y + t0)) - t0;
  });
}

}  // namespace ordent
