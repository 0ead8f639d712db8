#pragma once

// Umbrella header for the nvlogic many-valued logic engine.

#include "nvlogic/connectives.hpp"
#include "nvlogic/errors.hpp"
#include "nvlogic/evaluate.hpp"
#include "nvlogic/formula.hpp"
#include "nvlogic/interval.hpp"
#include "nvlogic/refined.hpp"
#include "nvlogic/signature.hpp"
#include "nvlogic/symbolic.hpp"
#include "nvlogic/text.hpp"
#include "nvlogic/tnorms.hpp"
