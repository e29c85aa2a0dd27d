#pragma once

#include <cstdint>

#include "relcalc/model.hpp"

namespace relcalc {

// Streams every state vector in binary counting order, lowest mutable
// coordinate toggling fastest. AOA mutates all m coordinates; AON keeps the
// terminal coordinates pinned to 1 and counts over the n-2 interior ones.
// Holds only the current vector; cursors over disjoint position ranges can
// run concurrently.
class BatCursor {
public:
    BatCursor(Mode mode, int length);

    const StateVector& current() const { return current_; }
    std::uint64_t position() const { return position_; }
    bool exhausted() const { return exhausted_; }

    int mutable_bits() const { return last_ - first_; }
    std::uint64_t total_vectors() const { return std::uint64_t{1} << mutable_bits(); }

    // Steps to the next vector; returns false (and stays exhausted) at the end.
    bool advance();

    // Repositions to an arbitrary position in [0, total_vectors()).
    void seek(std::uint64_t position);

private:
    StateVector current_;
    std::uint64_t position_ = 0;
    int first_ = 0;  // mutable coordinate range [first_, last_) into bits
    int last_ = 0;
    bool exhausted_ = false;
};

BatCursor enumerate_aoa(int arc_count);   // 2^m vectors, arc_count >= 1
BatCursor enumerate_aon(int node_count);  // 2^(n-2) vectors, node_count >= 2

}  // namespace relcalc
