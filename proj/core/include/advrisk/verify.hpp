#ifndef ADVRISK_VERIFY_HPP
#define ADVRISK_VERIFY_HPP

#include <ostream>

namespace advrisk {

/// Runs the oracle cross-check suite on a seeded corpus (solver vs brute-force
/// assignment, flow vs exact transport LP, engine agreement, closed forms vs
/// grid discretization, duality closure, interval-calculus laws). Prints one
/// line per check; returns false on any violation.
bool run_verification(std::ostream& out);

}  // namespace advrisk

#endif  // ADVRISK_VERIFY_HPP
