#pragma once

#include "complex_bessel.hpp"
#include "config.hpp"
#include "error_norms.hpp"
#include "meshio.hpp"
#include "params.hpp"
#include "solution.hpp"
#include "verify.hpp"
