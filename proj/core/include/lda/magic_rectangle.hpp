#pragma once

#include <vector>

namespace lda {

// rows x cols arrangement of 1..rows*cols with constant row sums
// cols(rows*cols+1)/2 and constant column sums rows(rows*cols+1)/2.
struct MagicRectangle {
    int rows = 0;
    int cols = 0;
    std::vector<int> entries; // row-major

    auto at(int i, int j) const -> int { return entries[static_cast<std::size_t>(i) * cols + j]; }
};

auto is_magic_rectangle(const MagicRectangle & m) -> bool;

// Throws ErrorKind::domain when no rectangle of these dimensions exists
// (opposite parity, 1 x k with k > 1, 2 x 2).
auto magic_rectangle(int rows, int cols) -> MagicRectangle;

auto transpose(const MagicRectangle & m) -> MagicRectangle;

} // namespace lda
