#pragma once

#include "radosc/coherent.hpp"
#include "radosc/dynamics.hpp"
#include "radosc/errors.hpp"
#include "radosc/grid.hpp"
#include "radosc/observables.hpp"
#include "radosc/operators.hpp"
#include "radosc/specfun.hpp"
#include "radosc/statespace.hpp"
#include "radosc/version.hpp"
