#pragma once

#include "gabriel/error.hpp"
#include "gabriel/lattice.hpp"
#include "gabriel/interval.hpp"
#include "gabriel/interval_set.hpp"
#include "gabriel/classes.hpp"
#include "gabriel/dimension.hpp"
#include "gabriel/verify.hpp"
#include "gabriel/text_format.hpp"
#include "gabriel/generators.hpp"
#include "gabriel/dot.hpp"
#include "gabriel/report_json.hpp"
