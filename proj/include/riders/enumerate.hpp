// Ground-truth counting of nonattacking placements by backtracking over
// the attack graph.  No formulas from the rest of the project are used
// here; this module is the oracle everything else is checked against.
#pragma once

#include "riders/core.hpp"
#include "riders/rational.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace riders {

struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& w) : std::runtime_error(w) {}
};

// Symmetric, irreflexive adjacency over the n^2 squares, stored as one
// bitset row per square.  Square (x,y), 1-based, has index (y-1)*n + (x-1).
struct AttackGraph {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;  // n^2 rows of `words` words

    std::span<const std::uint64_t> row(int square) const {
        return {bits.data() + static_cast<size_t>(square) * words, static_cast<size_t>(words)};
    }
    bool adjacent(int i, int j) const {
        return (row(i)[static_cast<size_t>(j) / 64] >> (j % 64)) & 1u;
    }
};

AttackGraph build_attack_graph(const Piece& piece, BoardSize board);

struct CountRecord {
    std::string piece;  // canonical text
    long q = 0;
    long n = 0;
    Integer count;
};

struct CountOptions {
    int threads = 1;
    std::uint64_t max_nodes = 0;  // 0 = unlimited; exceeded -> ResourceLimit
};

// Number of q-element independent sets in the attack graph, exact.
// q = 0 counts the empty placement once; q > n^2 gives 0.
CountRecord count_nonattacking(const Piece& piece, long q, BoardSize board,
                               const CountOptions& options = {});

// Classical row-by-row n-queens backtracking; independent of the graph
// counter on purpose (it validates the q = n diagonal).
CountRecord count_diagonal_queen(BoardSize board, int max_n = 10);

}  // namespace riders
