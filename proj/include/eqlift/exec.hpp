#pragma once

namespace eqlift {

// Every data-parallel kernel keeps a plain serial loop next to its OpenMP
// variant. The serial path is the reference used by the tests and benchmarks.
enum class Exec { serial, parallel };

}  // namespace eqlift
