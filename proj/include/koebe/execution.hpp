#pragma once

namespace koebe {

/// Selects the OpenMP kernel or its serial reference. Both produce identical
/// results; the serial path is what the tests compare against.
enum class Execution { Serial, Parallel };

}  // namespace koebe
