#pragma once

#include "bigint.hpp"
#include "checks.hpp"
#include "constraint_class.hpp"
#include "enumerate.hpp"
#include "franklin.hpp"
#include "identities.hpp"
#include "partition.hpp"
#include "profile.hpp"
#include "report.hpp"
#include "series.hpp"
#include "tables.hpp"
