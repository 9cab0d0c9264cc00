#ifndef FLATNEST_FLATNEST_HPP
#define FLATNEST_FLATNEST_HPP

#include "flatnest/blowup.hpp"
#include "flatnest/building.hpp"
#include "flatnest/catalog.hpp"
#include "flatnest/complex.hpp"
#include "flatnest/error.hpp"
#include "flatnest/exact.hpp"
#include "flatnest/fan.hpp"
#include "flatnest/flat.hpp"
#include "flatnest/ground.hpp"
#include "flatnest/json_io.hpp"
#include "flatnest/oracle.hpp"
#include "flatnest/pipeline.hpp"
#include "flatnest/sorted_set.hpp"

#endif  // FLATNEST_FLATNEST_HPP
