#pragma once

#include "tempodisc/types.hpp"

namespace tempodisc {

// q-deformed exponential and logarithm kernels:
//
//   e_q^x  = [1 + (1-q) x]^(1/(1-q))        -> exp(x) as q -> 1
//   ln_q y = (y^(1-q) - 1) / (1-q)          -> log(y) as q -> 1
//
// All powers go through log1p/expm1 so that factors like (1 + 1e-6*n)^(1/n)
// keep full precision instead of cancelling in the (1+x) sum.

// |q - 1| below this evaluates the exponential limit directly; the closed
// form divides by 1-q and loses all precision near the limit.
inline constexpr double kExponentialLimitSwitch = 1e-8;

// (1 + x)^p for x > -1, evaluated as exp(p * log1p(x)).
double pow1p(double x, double p);

// e_q^x. Defined for all x with 1 + (1-q) x > 0; throws DomainError
// otherwise. For q >= 1 and x <= 0 this always holds and the result lies
// in (0, 1].
double q_exp(QIndex q, double x);

// ln_q y for y > 0. Exact functional inverse of q_exp on its range.
double q_log(QIndex q, double y);

}  // namespace tempodisc
