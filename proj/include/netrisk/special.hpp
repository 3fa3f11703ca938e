#pragma once

namespace netrisk {

/// Dawson's integral F(x) = exp(-x^2) * integral_0^x exp(s^2) ds.
/// Absolute accuracy better than 1e-15 on the whole real line.
double dawson(double x);

}  // namespace netrisk
