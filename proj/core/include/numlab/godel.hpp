#pragma once

// Numbering of counter-machine programs by iterated Cantor pairing.
//
// Symbols are first mapped through a canonical table: Y -> 0, Xi -> 2i - 1,
// every other variable -> 2j in order of first appearance (j = 1, 2, ...),
// and labels -> 0, 1, 2, ... in order of first appearance. Decoding names the
// variables back as Y, Xi, Zj and labels as L0, L1, ..., so a decoded program
// computes the same function as the original.

#include "numlab/bigint.hpp"
#include "numlab/machine.hpp"

namespace numlab::reductions {

/// Injective up to canonical renaming of scratch variables and labels.
BigInt encode_program(const machine::Program& program);

/// Total: every natural decodes to a valid program. A label slot that an
/// earlier instruction already carries is dropped, so arbitrary numbers never
/// produce duplicate labels.
machine::Program decode_program(const BigInt& n);

/// The representative of `program` under canonical renaming;
/// decode_program(encode_program(p)) == canonical_renaming(p).
machine::Program canonical_renaming(const machine::Program& program);

}  // namespace numlab::reductions
