#include "relcalc/enumeration.hpp"

#include <stdexcept>

namespace relcalc {

BatCursor::BatCursor(Mode mode, int length) {
    if (mode == Mode::AOA) {
        if (length < 1) {
            throw std::invalid_argument("arc count must be at least 1");
        }
        first_ = 0;
        last_ = length;
    } else {
        if (length < 2) {
            throw std::invalid_argument("node count must be at least 2");
        }
        first_ = 1;
        last_ = length - 1;
    }
    if (mutable_bits() > 62) {
        throw std::invalid_argument("state space exceeds 2^62 vectors");
    }
    current_.mode = mode;
    current_.bits.assign(length, 0);
    if (mode == Mode::AON) {
        current_.bits.front() = 1;
        current_.bits.back() = 1;
    }
}

bool BatCursor::advance() {
    if (exhausted_) {
        return false;
    }
    // Binary increment, lowest mutable coordinate first; carry-out means the
    // all-ones vector was the last one.
    for (int k = first_; k < last_; ++k) {
        if (current_.bits[k] == 0) {
            current_.bits[k] = 1;
            ++position_;
            return true;
        }
        current_.bits[k] = 0;
    }
    exhausted_ = true;
    position_ = total_vectors();
    return false;
}

void BatCursor::seek(std::uint64_t position) {
    if (position >= total_vectors()) {
        throw std::out_of_range("seek position past the end of the enumeration");
    }
    for (int k = first_; k < last_; ++k) {
        current_.bits[k] = static_cast<std::uint8_t>((position >> (k - first_)) & 1u);
    }
    position_ = position;
    exhausted_ = false;
}

BatCursor enumerate_aoa(int arc_count) {
    return BatCursor(Mode::AOA, arc_count);
}

BatCursor enumerate_aon(int node_count) {
    return BatCursor(Mode::AON, node_count);
}

}  // namespace relcalc
