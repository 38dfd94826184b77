#pragma once

// Coefficients of the quadratic A2 and A3 Weyl group multiple Dirichlet
// series.

#include "cubezeta/arith.hpp"

namespace cubezeta {

// min(p^{k/2}, p^{l/2}) when min(k, l) is even, else 0.
i64 a_pp(i64 p, unsigned k, unsigned l);

// Product of a_pp over primes at the exact exponents of D and m.
i64 a_coeff(i64 D, i64 m);

// sum over d | D1, d | m, d | n of d * a(D/d^2, m/d) * a(D/d^2, n/d).
i64 a_coeff3(i64 D, i64 m, i64 n);

// chi_D(hat(m)) * a(D, m).
i64 tilde_A(i64 D, i64 m);

} // namespace cubezeta
