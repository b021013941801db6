#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace momentset {

/// One named end-to-end check over the library, timed in isolation.
struct FixtureResult {
    std::string name;
    bool pass = false;
    std::int64_t milliseconds = 0;
    std::string detail;
};

/// Runs the built-in reference fixtures in a fixed order. Each fixture
/// exercises one documented behavior end to end; a failing fixture carries
/// a short explanation in `detail`. Exceptions are caught per fixture so a
/// broken invariant in one cannot mask the others.
std::vector<FixtureResult> run_reference_fixtures();

} // namespace momentset
