#pragma once

#include <vector>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

/// Normalized integrals: lambda in H* with <lambda, 1> = 1 and Lambda in H with
/// <lambda, Lambda> = 1. In the semisimple case <eps, Lambda> = dim H.
struct IntegralPair {
  Vector dual_integral;    // lambda
  Vector integral;         // Lambda
  Vector integral_scaled;  // Lambda / dim H
  bool semisimple = false;
  bool cosemisimple = false;
  bool two_sided = false;  // Lambda h = eps(h) Lambda for all basis h
};

/// Basis of {x in H : b_i x = eps(b_i) x for all i}.
std::vector<Vector> left_integral_space(const HopfData& h);

/// Throws NotSemisimple when a normalization denominator vanishes and
/// IntegralSpaceError when an integral space is not one-dimensional.
IntegralPair compute_integrals(const HopfData& h);

}  // namespace hopfkit
