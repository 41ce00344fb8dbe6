#pragma once

#include "wonderful/arithmetic.hpp"
#include "wonderful/curves.hpp"
#include "wonderful/errors.hpp"
#include "wonderful/orbit_label.hpp"
#include "wonderful/reference.hpp"
#include "wonderful/root_system.hpp"
#include "wonderful/weyl.hpp"
#include "wonderful/wonderful.hpp"
