#pragma once

#include "catalog.hpp"
#include "combinatorics.hpp"
#include "complex.hpp"
#include "converse.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "group.hpp"
#include "polygon.hpp"
#include "record.hpp"
#include "reproduce.hpp"
#include "snub.hpp"
#include "uniformity.hpp"
