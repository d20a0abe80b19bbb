#pragma once

// Umbrella header: the full vacuum curvature-noise library.

#include "gravnoise/config.hpp"
#include "gravnoise/coupling.hpp"
#include "gravnoise/curvature.hpp"
#include "gravnoise/deviation.hpp"
#include "gravnoise/dimension.hpp"
#include "gravnoise/errors.hpp"
#include "gravnoise/integrate.hpp"
#include "gravnoise/matter.hpp"
#include "gravnoise/modified.hpp"
#include "gravnoise/momentum.hpp"
#include "gravnoise/output.hpp"
#include "gravnoise/projector.hpp"
#include "gravnoise/quadrature.hpp"
#include "gravnoise/rational.hpp"
#include "gravnoise/spectral.hpp"
#include "gravnoise/tensor.hpp"
#include "gravnoise/tidal.hpp"
#include "gravnoise/validation.hpp"
#include "gravnoise/version.hpp"
