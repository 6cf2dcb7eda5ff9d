#pragma once

#include "homcount/arith.hpp"
#include "homcount/cyclic_homs.hpp"
#include "homcount/divisibility.hpp"
#include "homcount/errors.hpp"
#include "homcount/product_structures.hpp"
#include "homcount/report.hpp"
