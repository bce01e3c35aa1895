#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "zkit/errors.hpp"
#include "zkit/quadext.hpp"

namespace zkit {

/// Endpoint of a piece: a finite quadratic-extension value or +/- infinity.
struct Bound {
    enum Kind { NegInf, Finite, PosInf };

    Kind kind = Finite;
    QuadExt value;  // meaningful only when kind == Finite

    static Bound neg_inf() { return {NegInf, QuadExt()}; }
    static Bound pos_inf() { return {PosInf, QuadExt()}; }
    static Bound at(QuadExt v) { return {Finite, std::move(v)}; }

    bool finite() const { return kind == Finite; }

    // Total order with -inf < finite < +inf.
    int cmp(const Bound& o) const {
        if (kind != Finite || o.kind != Finite) {
            int l = kind == NegInf ? -1 : kind == PosInf ? 1 : 0;
            int r = o.kind == NegInf ? -1 : o.kind == PosInf ? 1 : 0;
            return l < r ? -1 : l > r ? 1 : 0;
        }
        return value.cmp(o.value);
    }
    bool operator==(const Bound& o) const { return cmp(o) == 0; }
    bool operator<(const Bound& o) const { return cmp(o) < 0; }
    bool operator<=(const Bound& o) const { return cmp(o) <= 0; }
};

/// One maximal connected piece: an interval with open/closed finite ends, or
/// a single point (lo == hi, both flags set).
struct Piece {
    Bound lo, hi;
    bool lo_closed = false;
    bool hi_closed = false;

    bool is_point() const { return lo.finite() && hi.finite() && lo == hi; }

    static Piece point(QuadExt at) {
        Bound b = Bound::at(std::move(at));
        return {b, b, true, true};
    }
    static Piece interval(Bound lo, Bound hi, bool lc, bool hc) {
        return {std::move(lo), std::move(hi), lc, hc};
    }

    bool contains(const QuadExt& x) const {
        Bound b = Bound::at(x);
        int cl = lo.cmp(b);
        if (cl > 0 || (cl == 0 && !lo_closed)) return false;
        int ch = b.cmp(hi);
        if (ch > 0 || (ch == 0 && !hi_closed)) return false;
        return true;
    }
};

/// Finite union of disjoint intervals and points on a parametrized line, in
/// normal form: sorted, pairwise disjoint, adjacent pieces not mergeable.
/// This is where restrictions of spacetime regions to axes are decided.
class OneDimSet {
public:
    OneDimSet() = default;

    static OneDimSet empty() { return {}; }
    static OneDimSet all() {
        OneDimSet s;
        s.pieces_.push_back(Piece::interval(Bound::neg_inf(), Bound::pos_inf(), false, false));
        return s;
    }
    static OneDimSet point(QuadExt at) {
        OneDimSet s;
        s.pieces_.push_back(Piece::point(std::move(at)));
        return s;
    }
    static OneDimSet interval(Bound lo, Bound hi, bool lo_closed, bool hi_closed) {
        OneDimSet s;
        if (lo.kind == Bound::NegInf) lo_closed = false;
        if (hi.kind == Bound::PosInf) hi_closed = false;
        int c = lo.cmp(hi);
        if (c > 0) return s;
        if (c == 0) {
            if (lo_closed && hi_closed && lo.finite()) s.pieces_.push_back(Piece::point(lo.value));
            return s;
        }
        s.pieces_.push_back(Piece::interval(std::move(lo), std::move(hi), lo_closed, hi_closed));
        return s;
    }
    /// Convenience: open interval (lo, hi) with finite QuadExt endpoints.
    static OneDimSet open_interval(QuadExt lo, QuadExt hi) {
        return interval(Bound::at(std::move(lo)), Bound::at(std::move(hi)), false, false);
    }
    static OneDimSet closed_interval(QuadExt lo, QuadExt hi) {
        return interval(Bound::at(std::move(lo)), Bound::at(std::move(hi)), true, true);
    }
    static OneDimSet from_pieces(std::vector<Piece> raw) {
        OneDimSet s;
        s.pieces_ = normalize(std::move(raw));
        return s;
    }

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_empty() const { return pieces_.empty(); }

    bool contains(const QuadExt& x) const {
        for (const auto& p : pieces_)
            if (p.contains(x)) return true;
        return false;
    }

    /// No isolated points and every finite endpoint open.
    bool is_open() const {
        for (const auto& p : pieces_) {
            if (p.is_point()) return false;
            if (p.lo.finite() && p.lo_closed) return false;
            if (p.hi.finite() && p.hi_closed) return false;
        }
        return true;
    }

    /// Every finite endpoint closed (points qualify); equivalent to the
    /// complement being open.
    bool is_closed() const {
        for (const auto& p : pieces_) {
            if (p.lo.finite() && !p.lo_closed) return false;
            if (p.hi.finite() && !p.hi_closed) return false;
        }
        return true;
    }

    bool is_bounded() const {
        for (const auto& p : pieces_)
            if (!p.lo.finite() || !p.hi.finite()) return false;
        return true;
    }

    /// Heine-Borel on the line: closed and bounded.
    bool is_compact_1d() const { return is_closed() && is_bounded(); }

    /// Only isolated points (finitely many by construction).
    bool is_finite() const {
        for (const auto& p : pieces_)
            if (!p.is_point()) return false;
        return true;
    }

    std::size_t point_count() const {
        std::size_t n = 0;
        for (const auto& p : pieces_) n += p.is_point();
        return n;
    }

    /// The piece containing x, if any.
    std::optional<Piece> piece_containing(const QuadExt& x) const {
        for (const auto& p : pieces_)
            if (p.contains(x)) return p;
        return std::nullopt;
    }

    bool operator==(const OneDimSet& o) const {
        if (pieces_.size() != o.pieces_.size()) return false;
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            const Piece &a = pieces_[i], &b = o.pieces_[i];
            if (!(a.lo == b.lo) || !(a.hi == b.hi)) return false;
            if (a.lo_closed != b.lo_closed || a.hi_closed != b.hi_closed) return false;
        }
        return true;
    }

    friend OneDimSet set_union(const OneDimSet& a, const OneDimSet& b) {
        std::vector<Piece> raw = a.pieces_;
        raw.insert(raw.end(), b.pieces_.begin(), b.pieces_.end());
        return from_pieces(std::move(raw));
    }

    friend OneDimSet set_complement(const OneDimSet& s) {
        OneDimSet r;
        Bound cursor = Bound::neg_inf();
        bool cursor_closed = false;  // whether `cursor` itself is excluded from the gap
        for (const auto& p : s.pieces_) {
            // gap [cursor, p.lo) with flipped closedness at both ends
            append_gap(r.pieces_, cursor, !cursor_closed && cursor.finite(), p.lo,
                       !p.lo_closed && p.lo.finite());
            cursor = p.hi;
            cursor_closed = p.hi_closed;
        }
        append_gap(r.pieces_, cursor, !cursor_closed && cursor.finite(), Bound::pos_inf(), false);
        return r;
    }

    friend OneDimSet set_intersect(const OneDimSet& a, const OneDimSet& b) {
        std::vector<Piece> out;
        std::size_t i = 0, j = 0;
        while (i < a.pieces_.size() && j < b.pieces_.size()) {
            const Piece &pa = a.pieces_[i], &pb = b.pieces_[j];
            // overlap = [max(lo), min(hi)] with matching flags
            Bound lo;
            bool lc;
            int cl = pa.lo.cmp(pb.lo);
            if (cl > 0) {
                lo = pa.lo;
                lc = pa.lo_closed;
            } else if (cl < 0) {
                lo = pb.lo;
                lc = pb.lo_closed;
            } else {
                lo = pa.lo;
                lc = pa.lo_closed && pb.lo_closed;
            }
            Bound hi;
            bool hc;
            int ch = pa.hi.cmp(pb.hi);
            if (ch < 0) {
                hi = pa.hi;
                hc = pa.hi_closed;
            } else if (ch > 0) {
                hi = pb.hi;
                hc = pb.hi_closed;
            } else {
                hi = pa.hi;
                hc = pa.hi_closed && pb.hi_closed;
            }
            int c = lo.cmp(hi);
            if (c < 0)
                out.push_back(Piece::interval(lo, hi, lc, hc));
            else if (c == 0 && lc && hc && lo.finite())
                out.push_back(Piece::point(lo.value));
            if (ch <= 0)
                ++i;
            else
                ++j;
        }
        OneDimSet r;
        r.pieces_ = std::move(out);  // already sorted and disjoint
        return r;
    }

    friend OneDimSet set_difference(const OneDimSet& a, const OneDimSet& b) {
        return set_intersect(a, set_complement(b));
    }

    std::string str() const {
        if (pieces_.empty()) return "{}";
        std::string out;
        for (const auto& p : pieces_) {
            if (!out.empty()) out += " u ";
            if (p.is_point()) {
                out += "{" + p.lo.value.str() + "}";
            } else {
                out += p.lo_closed ? "[" : "(";
                out += p.lo.finite() ? p.lo.value.str() : "-inf";
                out += ", ";
                out += p.hi.finite() ? p.hi.value.str() : "+inf";
                out += p.hi_closed ? "]" : ")";
            }
        }
        return out;
    }

private:
    static void append_gap(std::vector<Piece>& out, const Bound& lo, bool lc, const Bound& hi,
                           bool hc) {
        int c = lo.cmp(hi);
        if (c > 0) return;
        if (c == 0) {
            if (lc && hc && lo.finite()) out.push_back(Piece::point(lo.value));
            return;
        }
        out.push_back(Piece::interval(lo, hi, lc, hc));
    }

    static std::vector<Piece> normalize(std::vector<Piece> raw) {
        std::erase_if(raw, [](const Piece& p) {
            int c = p.lo.cmp(p.hi);
            if (c > 0) return true;
            if (c == 0) return !(p.lo.finite() && p.lo_closed && p.hi_closed);
            return false;
        });
        for (auto& p : raw) {
            if (!p.lo.finite()) p.lo_closed = false;
            if (!p.hi.finite()) p.hi_closed = false;
        }
        std::sort(raw.begin(), raw.end(), [](const Piece& x, const Piece& y) {
            int c = x.lo.cmp(y.lo);
            if (c != 0) return c < 0;
            if (x.lo_closed != y.lo_closed) return x.lo_closed;
            return x.hi.cmp(y.hi) < 0;
        });
        std::vector<Piece> out;
        for (auto& p : raw) {
            if (out.empty()) {
                out.push_back(std::move(p));
                continue;
            }
            Piece& cur = out.back();
            int c = p.lo.cmp(cur.hi);
            bool joined = c < 0 || (c == 0 && (cur.hi_closed || p.lo_closed));
            if (!joined) {
                out.push_back(std::move(p));
                continue;
            }
            int ch = p.hi.cmp(cur.hi);
            if (ch > 0) {
                cur.hi = p.hi;
                cur.hi_closed = p.hi_closed;
            } else if (ch == 0) {
                cur.hi_closed = cur.hi_closed || p.hi_closed;
            }
        }
        return out;
    }

    std::vector<Piece> pieces_;
};

}  // namespace zkit
