#pragma once

#include <cstdint>

namespace crn {

/// Numerical policy shared across the library. The underlying definitions are
/// exact; every tolerance here is implementation policy.
struct Tolerances {
  double tol = 1e-8;        // residual bound for equivalence / balance checks
  double tolLin = 1e-10;    // subspace membership residual
  double tolLoglin = 1e-7;  // log-linear least-squares residual
  double posEps = 1e-9;     // closed-cone floor standing in for k > 0
};

struct SearchBudget {
  int starts = 64;           // multistart samples beyond the all-ones start
  int iters = 200;           // local descent iterations per start
  double logBoxLo = -3.0;    // log-coordinate search box
  double logBoxHi = 3.0;
  std::uint64_t subsetCap = std::uint64_t{1} << 24;  // subgraph enumeration cap
  std::uint64_t seed = 0;
};

}  // namespace crn
