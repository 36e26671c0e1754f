#pragma once

#include "dwm/dirac.hpp"
#include "dwm/eigen.hpp"
#include "dwm/error.hpp"
#include "dwm/io.hpp"
#include "dwm/observables.hpp"
#include "dwm/quadrature.hpp"
#include "dwm/resonance.hpp"
#include "dwm/spinor.hpp"
#include "dwm/tables.hpp"
#include "dwm/units.hpp"
#include "dwm/verify.hpp"
