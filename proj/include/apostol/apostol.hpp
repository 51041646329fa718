#pragma once

#include "apostol/errors.hpp"
#include "apostol/family.hpp"
#include "apostol/format.hpp"
#include "apostol/identities.hpp"
#include "apostol/multipoly.hpp"
#include "apostol/power_series.hpp"
#include "apostol/rational.hpp"
