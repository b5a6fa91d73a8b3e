#pragma once

#include "coneiso/cone.hpp"
#include "coneiso/errors.hpp"
#include "coneiso/geometry.hpp"
#include "coneiso/optimize.hpp"
#include "coneiso/oracle.hpp"
#include "coneiso/simplex.hpp"
#include "coneiso/vec2.hpp"
