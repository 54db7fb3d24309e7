#pragma once

namespace ecl {

// Number of worker threads honoring the ECL_THREADS env override.
// Returns at least 1; without OpenMP always 1.
int effective_threads();

}
