#pragma once

#include "disclab/appearance.hpp"
#include "disclab/discriminator.hpp"
#include "disclab/errors.hpp"
#include "disclab/fixedpoint.hpp"
#include "disclab/int_util.hpp"
#include "disclab/lucas.hpp"
#include "disclab/parallel.hpp"
#include "disclab/quadratic.hpp"
#include "disclab/sunit.hpp"
#include "disclab/verify.hpp"
