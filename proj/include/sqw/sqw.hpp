#pragma once

#include "sqw/errors.hpp"
#include "sqw/linalg.hpp"
#include "sqw/permworld.hpp"
#include "sqw/relations.hpp"
#include "sqw/s3world.hpp"
#include "sqw/twoqubit.hpp"
#include "sqw/xworld.hpp"
