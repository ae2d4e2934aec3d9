#include "zh/rules/bitboard.h"

namespace zh {

namespace {

struct LeaperTables {
    std::array<Bitboard, 64> knight{};
    std::array<Bitboard, 64> king{};
    std::array<std::array<Bitboard, 64>, 2> pawn{};

    LeaperTables() {
        constexpr int kn[8][2] = {{2, 1},  {1, 2},  {-1, 2},  {-2, 1},
                                  {-2, -1}, {-1, -2}, {1, -2}, {2, -1}};
        constexpr int kg[8][2] = {{1, 0},  {1, 1},  {0, 1},  {-1, 1},
                                  {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
        for (int sq = 0; sq < 64; ++sq) {
            int f = sq & 7, r = sq >> 3;
            for (auto& d : kn)
                if (on_board(f + d[1], r + d[0]))
                    knight[sq] |= bb(Square::of(f + d[1], r + d[0]));
            for (auto& d : kg)
                if (on_board(f + d[1], r + d[0]))
                    king[sq] |= bb(Square::of(f + d[1], r + d[0]));
            for (int df : {-1, 1}) {
                if (on_board(f + df, r + 1))
                    pawn[0][sq] |= bb(Square::of(f + df, r + 1));
                if (on_board(f + df, r - 1))
                    pawn[1][sq] |= bb(Square::of(f + df, r - 1));
            }
        }
    }
};

const LeaperTables kTables;

Bitboard ray_attacks(Square s, Bitboard occ, const int deltas[][2], int n) {
    Bitboard out = 0;
    int f0 = s.file(), r0 = s.rank();
    for (int i = 0; i < n; ++i) {
        int f = f0, r = r0;
        while (true) {
            f += deltas[i][0];
            r += deltas[i][1];
            if (!on_board(f, r)) break;
            Bitboard sq = bb(Square::of(f, r));
            out |= sq;
            if (occ & sq) break;
        }
    }
    return out;
}

}  // namespace

Bitboard knight_attacks(Square s) { return kTables.knight[s.index()]; }
Bitboard king_attacks(Square s) { return kTables.king[s.index()]; }
Bitboard pawn_attacks(Color c, Square s) {
    return kTables.pawn[static_cast<int>(c)][s.index()];
}

Bitboard bishop_attacks(Square s, Bitboard occ) {
    constexpr int d[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    return ray_attacks(s, occ, d, 4);
}

Bitboard rook_attacks(Square s, Bitboard occ) {
    constexpr int d[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    return ray_attacks(s, occ, d, 4);
}

}  // namespace zh
