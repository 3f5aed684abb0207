// Umbrella header: orthonormal trigonometric polynomials, orthogonal
// polynomials on the unit circle, and the machinery connecting them.
#pragma once

#include "otp/diagnostics.hpp"
#include "otp/errors.hpp"
#include "otp/favard.hpp"
#include "otp/laurent.hpp"
#include "otp/measure.hpp"
#include "otp/measure_io.hpp"
#include "otp/moments.hpp"
#include "otp/opuc.hpp"
#include "otp/power_series.hpp"
#include "otp/report.hpp"
#include "otp/schur.hpp"
#include "otp/trig_system.hpp"
