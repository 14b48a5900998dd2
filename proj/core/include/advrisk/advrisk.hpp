#ifndef ADVRISK_ADVRISK_HPP
#define ADVRISK_ADVRISK_HPP

#include "advrisk/analytic.hpp"
#include "advrisk/discrete.hpp"
#include "advrisk/ingest.hpp"
#include "advrisk/intervals.hpp"
#include "advrisk/loss_bounds.hpp"
#include "advrisk/measures.hpp"
#include "advrisk/mixture.hpp"
#include "advrisk/oracles.hpp"
#include "advrisk/problem.hpp"
#include "advrisk/report.hpp"
#include "advrisk/special.hpp"
#include "advrisk/verify.hpp"

#endif  // ADVRISK_ADVRISK_HPP
