#pragma once

#include "opmean/catalog.hpp"
#include "opmean/config.hpp"
#include "opmean/descriptor.hpp"
#include "opmean/eigensolve.hpp"
#include "opmean/errors.hpp"
#include "opmean/functions.hpp"
#include "opmean/io.hpp"
#include "opmean/matrix.hpp"
#include "opmean/mean.hpp"
#include "opmean/preservation.hpp"
#include "opmean/rng.hpp"
#include "opmean/spd.hpp"
#include "opmean/suites.hpp"
