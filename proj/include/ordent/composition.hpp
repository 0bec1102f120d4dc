#pragma once

#include "ordent/complexity.hpp"
#include "ordent/entropy.hpp"

namespace ordent {

/// Phi(x, y) = g^{-1}[g(x + g^{-1}(0)) + g(y + g^{-1}(0))] - g^{-1}(0), the law
/// with Z(p x q) = Phi(Z(p), Z(q)) for Z = g^{-1}(R_alpha) - g^{-1}(0).
/// Exponential classes give x + y; factorial-type classes give
/// e^{W[(x+1)ln(x+1) + (y+1)ln(y+1)]} - 1 whatever c is.
CompositionLaw composition_law_for(const ComplexityClass& cls);

}  // namespace ordent
