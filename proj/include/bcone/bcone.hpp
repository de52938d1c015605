#pragma once

#include "bcone/betti_table.hpp"
#include "bcone/cone.hpp"
#include "bcone/degree_sequence.hpp"
#include "bcone/functional.hpp"
#include "bcone/herzog_kuhl.hpp"
#include "bcone/io/module_file.hpp"
#include "bcone/io/table_file.hpp"
#include "bcone/local_cone.hpp"
#include "bcone/mcm.hpp"
#include "bcone/rational.hpp"
#include "bcone/resolve/hilbert.hpp"
#include "bcone/resolve/resolution.hpp"
#include "bcone/verify/cross_check.hpp"
