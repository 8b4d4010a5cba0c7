#pragma once

// Exact arithmetic kernel: rationals, sparse polynomials, canonical rational
// functions, resultants and rational roots.

#include "osptri/exact/bigrat.hpp"
#include "osptri/exact/errors.hpp"
#include "osptri/exact/gcd.hpp"
#include "osptri/exact/monomial.hpp"
#include "osptri/exact/parse.hpp"
#include "osptri/exact/poly.hpp"
#include "osptri/exact/ratfunc.hpp"
#include "osptri/exact/resultant.hpp"
#include "osptri/exact/unipoly.hpp"
