#pragma once

namespace walsh {

// Which pole behaviour an automorphism of a network has: fixes both poles
// (Plus) or exchanges them (Minus).
enum class PoleSign { Plus, Minus };

}  // namespace walsh
