#pragma once

namespace lpocode::detail {

__extension__ typedef unsigned __int128 uint128;

} // namespace lpocode::detail
