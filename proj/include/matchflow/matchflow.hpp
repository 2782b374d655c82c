#pragma once

#include "matchflow/chain.hpp"
#include "matchflow/errors.hpp"
#include "matchflow/generators.hpp"
#include "matchflow/graph.hpp"
#include "matchflow/io.hpp"
#include "matchflow/oracle.hpp"
#include "matchflow/series.hpp"
#include "matchflow/transfer.hpp"
