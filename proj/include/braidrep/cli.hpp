#pragma once

#include "braidrep/representation.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

/// Builtin representation grammar:
///   tym:n=<int>,u=<rational>   burau:n=<int>,t=<rational>   char:n=<int>,y=<rational>
///   tensor(<spec>,y=<rational>)   dsum(<spec>,<spec>)   conj(<spec>[,seed=<int>])
/// conj without an explicit seed uses `default_seed`.
Representation parse_builtin(std::string_view text, std::uint64_t default_seed = 0);

/// A JSON file path if one exists, otherwise a builtin spec.
Representation load_source(const std::string& source, std::uint64_t default_seed = 0);

/// Entry point of the braidrep tool. args excludes the program name.
/// Returns 0 on success and 2 on input errors; analysis findings are data.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidrep
