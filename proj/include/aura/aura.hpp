#pragma once

// Everything except the command layer (which needs libcrypto).
#include "aura/error.hpp"
#include "aura/point_set.hpp"
#include "aura/validation.hpp"
#include "aura/topology.hpp"
#include "aura/aura_space.hpp"
#include "aura/open_classes.hpp"
#include "aura/morphisms.hpp"
#include "aura/separation.hpp"
#include "aura/rough_approx.hpp"
#include "aura/spread.hpp"
#include "aura/sensor.hpp"
#include "aura/fixtures.hpp"
#include "aura/document.hpp"
#include "aura/generators.hpp"
#include "aura/properties.hpp"
