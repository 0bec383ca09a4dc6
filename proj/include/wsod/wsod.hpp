#pragma once

#include "wsod/dataset.hpp"
#include "wsod/detect.hpp"
#include "wsod/error.hpp"
#include "wsod/geometry.hpp"
#include "wsod/io.hpp"
#include "wsod/neighborhood.hpp"
#include "wsod/report.hpp"
#include "wsod/types.hpp"
#include "wsod/weights.hpp"
