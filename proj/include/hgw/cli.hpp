#pragma once

#include <iosfwd>

namespace hgw {

/// Entry point of the `hgw` tool. Returns 0 on success, 1 when a check
/// fails, 2 on usage errors.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hgw
