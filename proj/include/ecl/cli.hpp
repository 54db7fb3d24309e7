#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace ecl {

// "1.5", "-2i", "0.3+1.1i", "1-2e-3i", "i"
std::complex<double> parse_cplx(const std::string& s);

// Exit codes: 0 all checks pass (or pure info command), 1 a check failed,
// 2 usage or argument error, 3 internal failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace ecl
