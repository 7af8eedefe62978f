#pragma once

// Umbrella header. cache_io.hpp and cli.hpp additionally need nlohmann/json
// (and CLI11) and are included separately.

#include "weylinv/balanced.hpp"
#include "weylinv/character.hpp"
#include "weylinv/errors.hpp"
#include "weylinv/group_spec.hpp"
#include "weylinv/hv_geometry.hpp"
#include "weylinv/linalg.hpp"
#include "weylinv/membership.hpp"
#include "weylinv/polynomial.hpp"
#include "weylinv/root_system.hpp"
#include "weylinv/semigroup.hpp"
#include "weylinv/spin_lr.hpp"
#include "weylinv/weyl.hpp"
