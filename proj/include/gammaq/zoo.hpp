#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gammaq/state.hpp"

namespace gammaq {

// Canonical reference states used as regression fixtures.

PureState ghz();                // (|000> + |111>)/sqrt(2)
PureState w();                  // (|001> + |010> + |100>)/sqrt(3)
PureState bell();               // (|00> + |11>)/sqrt(2)
PureState cat(int m);           // (|0..0> + |1..1>)/sqrt(2), m >= 2 qubits
PureState psi1();               // (|0001> + |0100> + |1010> + |1111>)/2
PureState psi2();               // (|0110> + |1001> + |0111> + |1000>)/2

/// Tensor product of independently seeded random unit vectors, one per
/// subsystem. Always yields zero entanglement by construction.
PureState product_state(std::uint64_t seed, const Dims& dims);

/// Seeded random joint unit vector; real and imaginary parts drawn from a
/// standard normal, then normalized (rotation-invariant direction).
PureState random_state(std::uint64_t seed, const Dims& dims);

/// String dispatcher used by the CLI:
///   ghz | ghz3 | w | w3 | bell | psi1 | psi2 | cat<m>
///   random:<dims>[:<seed>]   e.g. random:2x2x2:42
///   product:<dims>[:<seed>]
/// The default seed applies when the name omits one.
PureState zoo(const std::string& name, std::uint64_t default_seed = 0);

std::vector<std::string> zoo_names();

Dims parse_dims(const std::string& text);  // "2x2x2" -> Dims({2,2,2})

}  // namespace gammaq
