#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace crslab {

/// Entry point of `crs-lab`. Returns the process exit status: 0 on success,
/// 1 when a verification suite has failing checks, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "a..b" (inclusive, empty when b < a), "a,b,c", or a single value.
/// Throws std::invalid_argument on malformed text.
std::vector<std::uint64_t> parse_u64_list(std::string_view text);

}  // namespace crslab
