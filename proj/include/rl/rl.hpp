#pragma once

// Exact truncated semi-Laurent series, generalized Riordan arrays over them,
// and the tangent/Lie structure of the resulting group.

#include "compose.hpp"
#include "dual.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "json.hpp"
#include "lie.hpp"
#include "prec.hpp"
#include "rational.hpp"
#include "render.hpp"
#include "riordan.hpp"
#include "series.hpp"
#include "verify.hpp"
