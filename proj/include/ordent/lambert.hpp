#pragma once

namespace ordent {

/// Principal branch W0 of the Lambert function: the unique w >= -1 with
/// w * exp(w) = x, for x >= -1/e.
///
/// Inputs within a few ulps of -1/e are treated as the branch point and map
/// to exactly -1 (the double nearest -1/e lies just below it). Anything
/// further below throws std::domain_error. Relative accuracy is about 1e-15
/// away from the branch point.
double lambert_w0(double x);

}  // namespace ordent
