#include "riders/enumerate.hpp"

#include <atomic>
#include <bit>
#include <mutex>
#include <sstream>
#include <thread>

namespace riders {

AttackGraph build_attack_graph(const Piece& piece, BoardSize board) {
    const int n = board.n;
    AttackGraph g;
    g.n = n;
    g.words = n > 0 ? (n * n + 63) / 64 : 0;
    g.bits.assign(static_cast<size_t>(n) * n * g.words, 0);

    auto set_edge = [&g](int i, int j) {
        g.bits[static_cast<size_t>(i) * g.words + static_cast<size_t>(j) / 64] |= 1ull << (j % 64);
        g.bits[static_cast<size_t>(j) * g.words + static_cast<size_t>(i) / 64] |= 1ull << (i % 64);
    };

    for (int y = 1; y <= n; ++y) {
        for (int x = 1; x <= n; ++x) {
            const int idx = (y - 1) * n + (x - 1);
            for (const Move& m : piece.moves) {
                for (int k = 1;; ++k) {
                    const int tx = x + k * m.c, ty = y + k * m.d;
                    if (tx < 1 || tx > n || ty < 1 || ty > n) break;
                    set_edge(idx, (ty - 1) * n + (tx - 1));
                }
            }
        }
    }
    return g;
}

namespace {

struct Counter {
    const AttackGraph& g;
    int words;
    int squares;
    long q;
    std::uint64_t max_nodes;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> over_budget{false};

    explicit Counter(const AttackGraph& graph, long pieces, std::uint64_t budget)
        : g(graph), words(graph.words), squares(graph.n * graph.n), q(pieces), max_nodes(budget) {}

    // Non-attacked squares strictly above `square` that are also in `mask`.
    void child_mask(const std::uint64_t* mask, int square, std::uint64_t* out) const {
        const std::uint64_t* attacked = g.bits.data() + static_cast<size_t>(square) * words;
        const int w0 = square / 64;
        for (int w = 0; w < w0; ++w) out[w] = 0;
        const std::uint64_t above = ~((2ull << (square % 64)) - 1);  // bits > square%64
        out[w0] = mask[w0] & above & ~attacked[w0];
        for (int w = w0 + 1; w < words; ++w) out[w] = mask[w] & ~attacked[w];
    }

    static std::uint64_t popcount(const std::uint64_t* mask, int words) {
        std::uint64_t c = 0;
        for (int w = 0; w < words; ++w) c += std::popcount(mask[w]);
        return c;
    }

    // Count completions with `remaining` more pieces chosen from `mask`.
    // Totals fit in __int128: each leaf batch adds at most n^2 <= 4096 and
    // any reachable node budget keeps the sum far below 2^127.
    unsigned __int128 recurse(const std::uint64_t* mask, long remaining, std::uint64_t& local_nodes,
                              std::uint64_t* scratch) {
        if (remaining == 1) return popcount(mask, words);
        unsigned __int128 total = 0;
        std::uint64_t* child = scratch;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = mask[w];
            while (bits) {
                const int s = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if ((++local_nodes & 0xFFFFF) == 0) flush_budget(local_nodes);
                child_mask(mask, s, child);
                total += recurse(child, remaining - 1, local_nodes, child + words);
            }
        }
        return total;
    }

    void flush_budget(std::uint64_t& local_nodes) {
        if (max_nodes == 0) return;
        if (nodes.fetch_add(local_nodes, std::memory_order_relaxed) + local_nodes > max_nodes)
            over_budget.store(true, std::memory_order_relaxed);
        local_nodes = 0;
        if (over_budget.load(std::memory_order_relaxed)) {
            std::ostringstream msg;
            msg << "node budget " << max_nodes << " exceeded";
            throw ResourceLimit(msg.str());
        }
    }
};

}  // namespace

CountRecord count_nonattacking(const Piece& piece, long q, BoardSize board,
                               const CountOptions& options) {
    CountRecord rec{canonical_text(piece), q, board.n, 0};
    const long squares = static_cast<long>(board.n) * board.n;
    if (q == 0) {
        rec.count = 1;
        return rec;
    }
    if (q < 0 || q > squares) return rec;
    if (q == 1) {
        rec.count = squares;
        return rec;
    }

    const AttackGraph g = build_attack_graph(piece, board);
    Counter counter(g, q, options.max_nodes);
    const int words = g.words;

    std::vector<std::uint64_t> full(static_cast<size_t>(words), ~0ull);
    if (squares % 64) full[static_cast<size_t>(words) - 1] = (1ull << (squares % 64)) - 1;

    const int nthreads = std::max(1, std::min<int>(options.threads, static_cast<int>(squares)));
    std::vector<Integer> partial(static_cast<size_t>(nthreads), Integer(0));
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&](int tid) {
        try {
            std::vector<std::uint64_t> scratch(static_cast<size_t>(words) * (q + 1));
            Integer acc = 0;
            // First square split round-robin over threads; summation of
            // exact integers makes the result order-independent.
            for (long s = tid; s < squares; s += nthreads) {
                std::uint64_t local_nodes = 1;
                counter.child_mask(full.data(), static_cast<int>(s), scratch.data());
                unsigned __int128 sub =
                    counter.recurse(scratch.data(), q - 1, local_nodes, scratch.data() + words);
                counter.flush_budget(local_nodes);
                acc += Integer(static_cast<std::uint64_t>(sub >> 64)) * (Integer(1) << 64) +
                       Integer(static_cast<std::uint64_t>(sub));
            }
            partial[static_cast<size_t>(tid)] = std::move(acc);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };

    if (nthreads == 1) {
        work(0);
    } else {
        pool.reserve(static_cast<size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    for (const Integer& p : partial) rec.count += p;
    return rec;
}

namespace {

std::uint64_t queens_from_row(int n, int row, std::uint64_t cols, std::uint64_t diag_up,
                              std::uint64_t diag_down) {
    if (row == n) return 1;
    std::uint64_t total = 0;
    std::uint64_t free = ~(cols | diag_up | diag_down) & ((1ull << n) - 1);
    while (free) {
        const std::uint64_t bit = free & (0 - free);
        free -= bit;
        total += queens_from_row(n, row + 1, cols | bit, (diag_up | bit) << 1, (diag_down | bit) >> 1);
    }
    return total;
}

}  // namespace

CountRecord count_diagonal_queen(BoardSize board, int max_n) {
    if (board.n > max_n) {
        std::ostringstream msg;
        msg << "n-queens diagonal limited to n <= " << max_n << ", got n = " << board.n;
        throw ResourceLimit(msg.str());
    }
    CountRecord rec{canonical_text(parse_piece("Q")), board.n, board.n, 0};
    rec.count = board.n == 0 ? Integer(1) : Integer(queens_from_row(board.n, 0, 0, 0, 0));
    return rec;
}

}  // namespace riders
