#pragma once

#include "coneforge/algebra.hpp"
#include "coneforge/cauchy_lab.hpp"
#include "coneforge/dense.hpp"
#include "coneforge/errors.hpp"
#include "coneforge/lorentz.hpp"
#include "coneforge/peirce.hpp"
#include "coneforge/sym_real.hpp"
#include "coneforge/tolerance.hpp"
#include "coneforge/triangular.hpp"
