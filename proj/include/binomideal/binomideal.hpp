#pragma once

// Vanishing ideals of finite point sets over prime fields, with binomial /
// lattice classification and monomial parameterizations of torus subgroups.

#include "binomideal/classify.hpp"
#include "binomideal/error.hpp"
#include "binomideal/field.hpp"
#include "binomideal/groebner.hpp"
#include "binomideal/monomial.hpp"
#include "binomideal/points.hpp"
#include "binomideal/polyring.hpp"
#include "binomideal/torusparam.hpp"
#include "binomideal/vanishing.hpp"
