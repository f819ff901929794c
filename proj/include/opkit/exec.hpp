#pragma once

namespace opkit {

/// Selects the OpenMP kernels or their serial counterparts. Results never
/// depend on the choice.
enum class Exec { serial, parallel };

}  // namespace opkit
