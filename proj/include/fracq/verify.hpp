#pragma once

#include "fracq/io.hpp"

namespace fracq {

/// Runs every identity suite under `cfg` and returns one row per identity,
/// sorted by suite name. Suites run concurrently; each draws its fields from
/// its own generator seeded from cfg.seed, so the report does not depend on
/// scheduling.
io::Report run_verify(const io::RunConfig& cfg);

/// Thresholds of the numerical cross-check rows (not scaled by cfg.tolerance).
inline constexpr double kOracleAgreementTol = 1e-3;
inline constexpr double kOracleRatioMin = 1.8;
/// Below this error the quadrature is at its rounding floor and the
/// convergence ratio carries no information.
inline constexpr double kOracleRatioFloor = 1e-11;
/// Minimum relative residual the guard rows must show.
inline constexpr double kGuardMin = 1e-3;

}  // namespace fracq
