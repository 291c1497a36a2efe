#pragma once

#include "quadtower/finite_field.hpp"
#include "quadtower/multiquad.hpp"
#include "quadtower/rational.hpp"
