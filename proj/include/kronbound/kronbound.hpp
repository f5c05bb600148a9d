#pragma once

#include "kronbound/barvinok.hpp"
#include "kronbound/bigint.hpp"
#include "kronbound/bounds.hpp"
#include "kronbound/characters.hpp"
#include "kronbound/constructions.hpp"
#include "kronbound/errors.hpp"
#include "kronbound/kostka.hpp"
#include "kronbound/kronecker.hpp"
#include "kronbound/limits.hpp"
#include "kronbound/littlewood_richardson.hpp"
#include "kronbound/partition.hpp"
#include "kronbound/partition_counts.hpp"
#include "kronbound/pyramids.hpp"
#include "kronbound/sweeps.hpp"
#include "kronbound/tables.hpp"
