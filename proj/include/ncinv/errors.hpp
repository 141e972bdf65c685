#pragma once

#include <stdexcept>

namespace ncinv {

// Bad user parameters are reported as std::invalid_argument (or a subclass).
// This one means two independent computations disagreed.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ncinv
