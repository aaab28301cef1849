#pragma once

#include "citerank/baselines.hpp"
#include "citerank/bibgraph.hpp"
#include "citerank/engines.hpp"
#include "citerank/errors.hpp"
#include "citerank/io.hpp"
#include "citerank/metrics.hpp"
#include "citerank/report.hpp"
#include "citerank/sparse.hpp"
#include "citerank/synth.hpp"
