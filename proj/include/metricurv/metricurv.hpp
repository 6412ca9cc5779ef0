#pragma once

#include "metricurv/baselines.hpp"
#include "metricurv/builders.hpp"
#include "metricurv/datasets.hpp"
#include "metricurv/errors.hpp"
#include "metricurv/format.hpp"
#include "metricurv/generators.hpp"
#include "metricurv/haantjes.hpp"
#include "metricurv/io.hpp"
#include "metricurv/menger.hpp"
#include "metricurv/metric.hpp"
#include "metricurv/network.hpp"
#include "metricurv/numeric.hpp"
#include "metricurv/paths.hpp"
#include "metricurv/random.hpp"
#include "metricurv/report.hpp"
#include "metricurv/transport.hpp"
