#include "riders/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace riders {

Move normalize_move(long cx, long dy) {
    if (cx == 0 && dy == 0) throw ZeroMove();
    long g = std::gcd(cx < 0 ? -cx : cx, dy < 0 ? -dy : dy);
    cx /= g;
    dy /= g;
    if (dy < 0 || (dy == 0 && cx < 0)) {
        cx = -cx;
        dy = -dy;
    }
    return Move{static_cast<int>(cx), static_cast<int>(dy)};
}

MoveNormalized normalized(Move m) {
    int a = m.c < 0 ? -m.c : m.c;
    int b = m.d < 0 ? -m.d : m.d;
    return MoveNormalized{std::min(a, b), std::max(a, b)};
}

Piece make_piece(std::vector<Move> moves, std::string name) {
    if (moves.empty()) throw EmptyPiece();
    std::sort(moves.begin(), moves.end());
    for (size_t i = 1; i < moves.size(); ++i) {
        if (moves[i] == moves[i - 1]) {
            std::ostringstream msg;
            msg << "parallel moves: (" << moves[i].c << "," << moves[i].d << ") appears twice after normalization";
            throw ParallelMoves(msg.str());
        }
    }
    return Piece{std::move(moves), std::move(name)};
}

namespace {

const Move kOrthogonal[2] = {Move{1, 0}, Move{0, 1}};
const Move kDiagonal[2] = {Move{1, 1}, Move{-1, 1}};

bool lookup_alias(const std::string& name, std::vector<Move>& out) {
    if (name == "Q") {
        out = {Move{1, 0}, Move{0, 1}, Move{1, 1}, Move{-1, 1}};
    } else if (name == "R") {
        out = {Move{1, 0}, Move{0, 1}};
    } else if (name == "B") {
        out = {Move{1, 1}, Move{-1, 1}};
    } else if (name == "N") {
        out = {Move{1, 2}, Move{2, 1}, Move{-1, 2}, Move{-2, 1}};
    } else if (name.size() == 3 && name[0] == 'Q' && name[1] >= '0' && name[1] <= '2' &&
               name[2] >= '0' && name[2] <= '2') {
        int northo = name[1] - '0';
        int ndiag = name[2] - '0';
        if (northo == 0 && ndiag == 0) throw EmptyPiece();
        out.clear();
        for (int i = 0; i < northo; ++i) out.push_back(kOrthogonal[i]);
        for (int i = 0; i < ndiag; ++i) out.push_back(kDiagonal[i]);
    } else {
        return false;
    }
    return true;
}

long parse_int(const std::string& tok) {
    if (tok.empty()) throw ParseError("empty integer in move");
    size_t pos = 0;
    long v;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + tok + "' in move");
    }
    if (pos != tok.size()) throw ParseError("bad integer '" + tok + "' in move");
    return v;
}

}  // namespace

Piece parse_piece(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw EmptyPiece();

    std::vector<Move> alias_moves;
    if (lookup_alias(s, alias_moves)) return make_piece(std::move(alias_moves), s);
    if (std::isalpha(static_cast<unsigned char>(s[0])))
        throw ParseError("unknown piece name '" + s + "'");

    std::vector<Move> moves;
    size_t start = 0;
    while (start <= s.size()) {
        size_t semi = s.find(';', start);
        std::string item = s.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        if (!item.empty()) {
            size_t comma = item.find(',');
            if (comma == std::string::npos)
                throw ParseError("move '" + item + "' is not of the form c,d");
            long cx = parse_int(item.substr(0, comma));
            long dy = parse_int(item.substr(comma + 1));
            moves.push_back(normalize_move(cx, dy));
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (moves.empty()) throw EmptyPiece();
    return make_piece(std::move(moves));
}

std::string canonical_text(const Piece& piece) {
    std::ostringstream out;
    for (size_t i = 0; i < piece.moves.size(); ++i) {
        if (i) out << ';';
        out << piece.moves[i].c << ',' << piece.moves[i].d;
    }
    return out.str();
}

long lambda_of(const Piece& piece) {
    long l = 1;
    for (const Move& m : piece.moves) l = std::lcm(l, static_cast<long>(normalized(m).dhat));
    return l;
}

}  // namespace riders
