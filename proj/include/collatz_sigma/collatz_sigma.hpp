#pragma once

#include "bigint.hpp"
#include "core.hpp"
#include "diophantine.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "recurrence.hpp"
#include "tuples.hpp"
