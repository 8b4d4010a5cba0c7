#pragma once

#include "osptri/exact.hpp"
#include "osptri/liedata.hpp"
#include "osptri/curves.hpp"
#include "osptri/spectra.hpp"
#include "osptri/catalog.hpp"
