#pragma once

#include "vam/domain.hpp"
#include "vam/envelope.hpp"
#include "vam/error.hpp"
#include "vam/metrics.hpp"
#include "vam/moebius.hpp"
#include "vam/point.hpp"
#include "vam/random.hpp"
#include "vam/special_functions.hpp"
#include "vam/sup.hpp"
#include "vam/verify.hpp"
