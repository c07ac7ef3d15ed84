#pragma once

#include "gf2max/common.hpp"
#include "gf2max/group.hpp"
#include "gf2max/matrix.hpp"
#include "gf2max/poly.hpp"
#include "gf2max/stream.hpp"
