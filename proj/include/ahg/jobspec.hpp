#pragma once

#include "ahg/chain_complex.hpp"

#include <iosfwd>
#include <string>

namespace ahg {

/// One CLI job: where the complexes come from, what to do, how to print.
struct JobSpec {
    std::string space_name; // builtin "interval" | "circle:L" | "sphere:d" | "torus:d:L"
    std::string space_file; // JSON file; exactly one of name/file per side
    std::string gauge_name; // builtin "zN-at-k" | "z4-z2"
    std::string gauge_file;
    bool json = false;
    unsigned seed = 0;
    Int max_dim = 4096;
    Int max_count = Int(1) << 20;

    GeometricComplex space() const;
    ChainComplex gauge() const;
};

GeometricComplex parse_space(const std::string& name);
ChainComplex parse_gauge(const std::string& name);

/// Exit codes shared by all commands.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,    // bad flags, names or input files
    kCapped = 2,   // a resource cap was exceeded
    kMismatch = 3, // a verification or agreement check failed
};

int cmd_homology(const JobSpec& spec, std::ostream& out);
int cmd_gsd(const JobSpec& spec, std::ostream& out);
int cmd_oracle(const JobSpec& spec, std::ostream& out);
int cmd_verify(const JobSpec& spec, const std::string& which, std::ostream& out);

/// Full argv-level entry point used by the binary; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ahg
