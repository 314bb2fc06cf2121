#pragma once

// Umbrella header for the library (the CLI layer lives in cli.hpp).

#include "nilcontact/cones.hpp"
#include "nilcontact/error.hpp"
#include "nilcontact/exceptional_table.hpp"
#include "nilcontact/lie_core.hpp"
#include "nilcontact/linalg.hpp"
#include "nilcontact/oracle_lab.hpp"
#include "nilcontact/orbits.hpp"
#include "nilcontact/partitions.hpp"
#include "nilcontact/report.hpp"
#include "nilcontact/resolutions.hpp"
#include "nilcontact/verify.hpp"
