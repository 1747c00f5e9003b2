#pragma once

#include "casimir/asymptotics.hpp"
#include "casimir/checks.hpp"
#include "casimir/conductor_solver.hpp"
#include "casimir/dynamic_solver.hpp"
#include "casimir/geometry.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/riccati.hpp"
#include "casimir/scaled.hpp"
#include "casimir/series.hpp"
#include "casimir/static_solver.hpp"
#include "casimir/sweep.hpp"
