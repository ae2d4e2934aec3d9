#include "zh/encoding/action_table.h"

#include <cassert>
#include <sstream>

#include "zh/errors.h"

namespace zh {

ActionTable::ActionTable() {
    shapes_.reserve(kNumActions);
    for (auto& row : drop_index_) row.fill(-1);
    for (auto& dir : linear_slot_)
        for (auto& plane : dir) plane.fill(-1);
    for (auto& plane : knight_slot_) plane.fill(-1);

    // drops: pawn, knight, bishop, rook, queen; targets in flattened order,
    // pawn section skips the first and last ranks
    for (int k = 0; k < kDroppableKinds; ++k) {
        for (int sq = 0; sq < 64; ++sq) {
            Square s(sq);
            if (k == static_cast<int>(PieceKind::Pawn) &&
                (s.rank() == 0 || s.rank() == 7))
                continue;
            drop_index_[k][sq] = static_cast<int>(shapes_.size());
            MoveShape shape;
            shape.tag = MoveShape::Tag::Drop;
            shape.drop_kind = static_cast<PieceKind>(k);
            shape.landing = s;
            shapes_.push_back(shape);
        }
    }
    assert(shapes_.size() == kLinearSectionStart);

    // linear: keep a landing square iff the implied origin is on the board,
    // except distance-1 diagonal planes keep all 64 squares
    for (int d = 0; d < 8; ++d) {
        const int dr = kLinearDirs[d][0], df = kLinearDirs[d][1];
        const bool diagonal = dr != 0 && df != 0;
        for (int dist = 1; dist <= 7; ++dist) {
            linear_base_[d][dist - 1] = static_cast<int>(shapes_.size());
            int count = 0;
            for (int sq = 0; sq < 64; ++sq) {
                Square s(sq);
                const bool origin_valid = on_board(s.file() - dist * df,
                                                   s.rank() - dist * dr);
                if (!origin_valid && !(diagonal && dist == 1)) continue;
                linear_slot_[d][dist - 1][sq] =
                    static_cast<int16_t>(shapes_.size() - linear_base_[d][dist - 1]);
                MoveShape shape;
                shape.tag = MoveShape::Tag::Linear;
                shape.direction = static_cast<uint8_t>(d);
                shape.distance = static_cast<uint8_t>(dist);
                shape.landing = s;
                shapes_.push_back(shape);
                ++count;
            }
            linear_plane_count_[d][dist - 1] = count;
        }
    }
    assert(shapes_.size() == kKnightSectionStart);

    // knight: remove landing squares only on ranks unreachable by the
    // direction's rank delta (file-invalid squares are kept)
    for (int d = 0; d < 8; ++d) {
        knight_base_[d] = static_cast<int>(shapes_.size());
        const int dr = kKnightDirs[d][0];
        for (int sq = 0; sq < 64; ++sq) {
            Square s(sq);
            if (s.rank() - dr < 0 || s.rank() - dr > 7) continue;
            knight_slot_[d][sq] = static_cast<int16_t>(shapes_.size() - knight_base_[d]);
            MoveShape shape;
            shape.tag = MoveShape::Tag::Knight;
            shape.direction = static_cast<uint8_t>(d);
            shape.landing = s;
            shapes_.push_back(shape);
        }
    }
    assert(shapes_.size() == kUnderpromoSectionStart);

    // underpromotion: piece {N,B,R} x lane {left-capture, push, right-capture}
    // x absolute landing file
    for (PieceKind p : {PieceKind::Knight, PieceKind::Bishop, PieceKind::Rook}) {
        for (int lane = 0; lane < 3; ++lane) {
            for (int file = 0; file < 8; ++file) {
                MoveShape shape;
                shape.tag = MoveShape::Tag::Underpromo;
                shape.promo_piece = p;
                shape.lane = static_cast<PromoLane>(lane);
                shape.file = static_cast<uint8_t>(file);
                shapes_.push_back(shape);
            }
        }
    }
    assert(shapes_.size() == kNumActions);
}

ActionTable build_action_table() { return ActionTable(); }

const ActionTable& action_table() {
    static const ActionTable table;
    return table;
}

namespace {

int underpromo_piece_slot(PieceKind p) {
    switch (p) {
        case PieceKind::Knight: return 0;
        case PieceKind::Bishop: return 1;
        case PieceKind::Rook: return 2;
        default: return -1;
    }
}

// Lane of a promotion capture, read from the mover's perspective: for P1
// "left" is toward the a-file, for P2 toward the h-file.
PromoLane lane_of(Color mover, int file_delta) {
    if (file_delta == 0) return PromoLane::Push;
    const bool left = mover == Color::P1 ? file_delta < 0 : file_delta > 0;
    return left ? PromoLane::LeftCapture : PromoLane::RightCapture;
}

int lane_file_delta(Color mover, PromoLane lane) {
    if (lane == PromoLane::Push) return 0;
    const bool left = lane == PromoLane::LeftCapture;
    return (mover == Color::P1) == left ? -1 : 1;
}

}  // namespace

ActionIndex ActionTable::move_to_index(const Position& pos, const Move& m) const {
    if (m.is_drop()) {
        int idx = drop_index_[static_cast<int>(m.drop_kind())][m.to().index()];
        assert(idx >= 0 && "pawn drop on a terminal rank");
        return ActionIndex(idx);
    }

    const int dr = m.to().rank() - m.from().rank();
    const int df = m.to().file() - m.from().file();

    if (auto promo = m.promotion(); promo && *promo != PieceKind::Queen) {
        const int piece = underpromo_piece_slot(*promo);
        const int lane = static_cast<int>(lane_of(pos.side_to_move(), df));
        return ActionIndex(kUnderpromoSectionStart + piece * 24 + lane * 8 +
                           m.to().file());
    }

    for (int d = 0; d < 8; ++d)
        if (kKnightDirs[d][0] == dr && kKnightDirs[d][1] == df) {
            int slot = knight_slot_[d][m.to().index()];
            assert(slot >= 0);
            return ActionIndex(knight_base_[d] + slot);
        }

    const int dist = std::max(std::abs(dr), std::abs(df));
    if (dist >= 1 && dist <= 7) {
        const int ur = dr == 0 ? 0 : dr / std::abs(dr);
        const int uf = df == 0 ? 0 : df / std::abs(df);
        if (dr == ur * dist && df == uf * dist) {
            for (int d = 0; d < 8; ++d)
                if (kLinearDirs[d][0] == ur && kLinearDirs[d][1] == uf) {
                    int slot = linear_slot_[d][dist - 1][m.to().index()];
                    assert(slot >= 0);
                    return ActionIndex(linear_base_[d][dist - 1] + slot);
                }
        }
    }
    throw UnencodableMove("no action-table section accepts this move");
}

Move ActionTable::index_to_move(const Position& pos, ActionIndex i) const {
    if (i.value() < 0 || i.value() >= kNumActions)
        throw IllegalIndex("action index out of range");
    const MoveShape& shape = shapes_[i.value()];
    std::optional<Move> m;

    switch (shape.tag) {
        case MoveShape::Tag::Drop:
            m = Move::drop(shape.drop_kind, shape.landing);
            break;
        case MoveShape::Tag::Linear: {
            const auto& dir = kLinearDirs[shape.direction];
            const int of = shape.landing.file() - shape.distance * dir[1];
            const int orank = shape.landing.rank() - shape.distance * dir[0];
            if (!on_board(of, orank)) break;
            Square from = Square::of(of, orank);
            auto piece = pos.piece_at(from);
            const int final_rank = pos.side_to_move() == Color::P1 ? 7 : 0;
            if (piece && piece->second == PieceKind::Pawn &&
                shape.landing.rank() == final_rank)
                m = Move::board(from, shape.landing, PieceKind::Queen);
            else
                m = Move::board(from, shape.landing);
            break;
        }
        case MoveShape::Tag::Knight: {
            const auto& dir = kKnightDirs[shape.direction];
            const int of = shape.landing.file() - dir[1];
            const int orank = shape.landing.rank() - dir[0];
            if (!on_board(of, orank)) break;
            m = Move::board(Square::of(of, orank), shape.landing);
            break;
        }
        case MoveShape::Tag::Underpromo: {
            const Color us = pos.side_to_move();
            const int to_rank = us == Color::P1 ? 7 : 0;
            const int from_rank = us == Color::P1 ? 6 : 1;
            const int of = shape.file - lane_file_delta(us, shape.lane);
            if (of < 0 || of > 7) break;
            m = Move::board(Square::of(of, from_rank),
                            Square::of(shape.file, to_rank), shape.promo_piece);
            break;
        }
    }

    if (!m || !is_legal(pos, *m))
        throw IllegalIndex("index does not decode to a legal move");
    return *m;
}

std::array<bool, kNumActions> ActionTable::legal_move_mask(const Position& pos) const {
    std::array<bool, kNumActions> mask{};
    for (const Move& m : legal_moves(pos)) mask[move_to_index(pos, m).value()] = true;
    return mask;
}

std::string shape_text(const MoveShape& shape) {
    static constexpr const char* kDirNames[8] = {"N", "NE", "E", "SE",
                                                 "S", "SW", "W", "NW"};
    static constexpr const char* kLaneNames[3] = {"left", "push", "right"};
    static constexpr const char* kKindNames[6] = {"pawn", "knight", "bishop",
                                                  "rook", "queen", "king"};
    std::ostringstream out;
    switch (shape.tag) {
        case MoveShape::Tag::Drop:
            out << "drop " << kKindNames[static_cast<int>(shape.drop_kind)] << ' '
                << square_name(shape.landing);
            break;
        case MoveShape::Tag::Linear:
            out << "linear " << kDirNames[shape.direction] << ' '
                << int(shape.distance) << ' ' << square_name(shape.landing);
            break;
        case MoveShape::Tag::Knight: {
            const auto& d = kKnightDirs[shape.direction];
            out << "knight " << (d[0] > 0 ? "+" : "") << d[0]
                << (d[1] > 0 ? "+" : "") << d[1] << ' ' << square_name(shape.landing);
            break;
        }
        case MoveShape::Tag::Underpromo:
            out << "underpromo " << kKindNames[static_cast<int>(shape.promo_piece)]
                << ' ' << kLaneNames[static_cast<int>(shape.lane)] << ' '
                << static_cast<char>('a' + shape.file);
            break;
    }
    return out.str();
}

std::string ActionTable::dump() const {
    std::ostringstream out;
    for (int i = 0; i < kNumActions; ++i)
        out << i << '\t' << shape_text(shapes_[i]) << '\n';
    return out.str();
}

}  // namespace zh
