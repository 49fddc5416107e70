#pragma once

#include <vector>

#include "schemegb/exactmath.hpp"

namespace schemegb::detail {

// Positive multiple of p with coprime integer coefficients.
std::vector<Integer> integer_multiple(const UniPoly& p);

// Sign of p(x) from integer_multiple(p), by homogeneous Horner evaluation.
int integer_sign(const std::vector<Integer>& p, const Rational& x);

}  // namespace schemegb::detail
