#pragma once

#include "dgnet/config_io.hpp"
#include "dgnet/dg_state.hpp"
#include "dgnet/diagnostics.hpp"
#include "dgnet/errors.hpp"
#include "dgnet/fundamental_diagram.hpp"
#include "dgnet/godunov.hpp"
#include "dgnet/junction_flux.hpp"
#include "dgnet/legendre.hpp"
#include "dgnet/limiter.hpp"
#include "dgnet/mesh.hpp"
#include "dgnet/network.hpp"
#include "dgnet/output.hpp"
#include "dgnet/spatial_operator.hpp"
#include "dgnet/system.hpp"
#include "dgnet/time_integration.hpp"
#include "dgnet/trajectory.hpp"
#include "dgnet/version.hpp"
