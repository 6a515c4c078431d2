#include "tiltwall/walls.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <thread>
#include <tuple>

#include "tiltwall/error.hpp"

namespace tiltwall {

Window Window::make(Rational beta_lo, Rational beta_hi, Rational t_lo, Rational t_hi) {
    if (beta_lo > beta_hi || t_lo.sign() <= 0 || t_lo > t_hi)
        throw Error(Errc::empty_window, "window requires beta_lo <= beta_hi and 0 < t_lo <= t_hi");
    return {std::move(beta_lo), std::move(beta_hi), std::move(t_lo), std::move(t_hi)};
}

WallConic wall_curve(const NumClass& v, const NumClass& w) {
    // (d2^b(v) - (t/6) r_v) c^b(w) = (d2^b(w) - (t/6) r_w) c^b(v), expanded
    // in beta. The beta^3 and t*beta coefficients of the raw expansion cancel
    // by symmetry in (r_v, r_w).
    WallConic out;
    out.u0 = (w.r * v.c - v.r * w.c) / 6;
    out.u1 = (v.r * w.r - w.r * v.r) / 6;
    out.q0 = v.d2 * w.c - w.d2 * v.c;
    out.q1 = v.r * w.d2 - w.r * v.d2;
    out.q2 = (v.c * w.r - w.c * v.r) / 2;
    Rational beta3 = (-v.r * w.r + w.r * v.r) / 2;
    if (!out.u1.is_zero() || !beta3.is_zero())
        throw std::logic_error("wall conic degree bound violated");
    return out;
}

bool on_wall(const NumClass& v, const NumClass& w, const Rational& beta, const Rational& t) {
    if (t.sign() <= 0) throw Error(Errc::nonpositive_t, "on_wall requires t > 0");
    return wall_curve(v, w).eval(beta, t).is_zero();
}

TSolution solve_t(const WallConic& wc, const Rational& beta) {
    Rational den = wc.t_coeff(beta);
    Rational num = wc.const_part(beta);
    if (!den.is_zero()) return {TSolution::Kind::value, -num / den};
    if (!num.is_zero()) return {TSolution::Kind::none, 0};
    return {TSolution::Kind::identically_satisfied, 0};
}

namespace {

// a2 b^2 + a1 b + a0
struct Quad {
    Rational a2, a1, a0;
    Rational eval(const Rational& x) const { return (a2 * x + a1) * x + a0; }
};

Rational quad_max_on(const Quad& h, const Rational& lo, const Rational& hi) {
    Rational m = max(h.eval(lo), h.eval(hi));
    if (h.a2.sign() < 0) {
        Rational vx = -h.a1 / (2 * h.a2);
        if (lo < vx && vx < hi) m = max(m, h.eval(vx));
    }
    return m;
}

bool quad_has_root_on(const Quad& h, const Rational& lo, const Rational& hi) {
    if (h.a2.is_zero() && h.a1.is_zero()) return h.a0.is_zero();
    if (h.a2.is_zero()) {
        Rational root = -h.a0 / h.a1;
        return lo <= root && root <= hi;
    }
    Rational va = h.eval(lo), vb = h.eval(hi);
    if (va.is_zero() || vb.is_zero() || va.sign() != vb.sign()) return true;
    Rational vx = -h.a1 / (2 * h.a2);
    if (lo < vx && vx < hi) {
        Rational vm = h.eval(vx);
        return vm.is_zero() || vm.sign() != va.sign();
    }
    return false;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    mpz_class n = x.num(), d = x.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    mpq_class q(rn, rd);
    q.canonicalize();
    return Rational(q);
}

void collect_rational_roots(const Quad& h, std::vector<Rational>& out) {
    if (h.a2.is_zero()) {
        if (!h.a1.is_zero()) out.push_back(-h.a0 / h.a1);
        return;
    }
    Rational disc = h.a1 * h.a1 - 4 * h.a2 * h.a0;
    auto s = rational_sqrt(disc);
    if (!s) return;
    out.push_back((-h.a1 + *s) / (2 * h.a2));
    out.push_back((-h.a1 - *s) / (2 * h.a2));
}

// Conic restricted to a beta-segment where U = u0 + u1*beta keeps one sign on
// the interior. t(beta) = -Q(beta)/U(beta).
struct Segment {
    Rational a, b;
    const WallConic& wc;

    Rational U(const Rational& x) const { return wc.t_coeff(x); }
    Rational Q(const Rational& x) const { return wc.const_part(x); }
    std::optional<Rational> t_at(const Rational& x) const {
        Rational u = U(x);
        if (u.is_zero()) return std::nullopt;
        return -Q(x) / u;
    }
};

std::optional<std::pair<Rational, Rational>> segment_witness(const Segment& seg,
                                                             const Rational& t_lo,
                                                             const Rational& t_hi) {
    std::vector<Rational> cands{seg.a, seg.b, (seg.a + seg.b) / 2};
    // Extrema of t(beta) when it is an honest quadratic (u1 == 0), and points
    // where t(beta) meets either t-bound with rational coordinates.
    Quad q{seg.wc.q2, seg.wc.q1, seg.wc.q0};
    if (seg.wc.u1.is_zero() && !seg.wc.q2.is_zero()) cands.push_back(-seg.wc.q1 / (2 * seg.wc.q2));
    for (const Rational& bound : {t_lo, t_hi}) {
        Quad cross{q.a2, q.a1 + seg.wc.u1 * bound, q.a0 + seg.wc.u0 * bound};
        collect_rational_roots(cross, cands);
    }
    auto in_range = [&](const Rational& x) { return seg.a <= x && x <= seg.b; };
    for (const Rational& x : cands) {
        if (!in_range(x)) continue;
        auto t = seg.t_at(x);
        if (t && t_lo <= *t && *t <= t_hi) return std::make_pair(x, *t);
    }

    // Bracket a crossing: one point with t above the window, one below, then
    // bisect. t is continuous on the segment interior.
    std::optional<Rational> above, below;
    for (const Rational& x : cands) {
        if (!in_range(x)) continue;
        auto t = seg.t_at(x);
        if (!t) continue;
        if (*t > t_hi && !above) above = x;
        if (*t < t_lo && !below) below = x;
    }
    if (!above || !below) return std::nullopt;
    Rational p = *above, r = *below;
    for (int iter = 0; iter < 256; ++iter) {
        Rational mid = (p + r) / 2;
        auto t = seg.t_at(mid);
        if (!t) break;
        if (t_lo <= *t && *t <= t_hi) return std::make_pair(mid, *t);
        (*t > t_hi ? p : r) = mid;
    }
    return std::nullopt;
}

// Both one-sided conditions on a sign-constant segment; their conjunction is
// equivalent to the image of t(beta) meeting [t_lo, t_hi], because the image
// of a continuous function on an interval is an interval.
bool segment_hits(const Segment& seg, const Rational& t_lo, const Rational& t_hi) {
    Rational mid = (seg.a + seg.b) / 2;
    int eps = seg.U(mid).sign();
    assert(eps != 0);
    Rational e(eps);
    // t(beta) >= t_lo somewhere:  eps * (-Q - t_lo U) >= 0 somewhere
    Quad h_lo{e * -(seg.wc.q2), e * (-(seg.wc.q1) - t_lo * seg.wc.u1),
              e * (-(seg.wc.q0) - t_lo * seg.wc.u0)};
    // t(beta) <= t_hi somewhere:  eps * (Q + t_hi U) >= 0 somewhere
    Quad h_hi{e * seg.wc.q2, e * (seg.wc.q1 + t_hi * seg.wc.u1),
              e * (seg.wc.q0 + t_hi * seg.wc.u0)};
    return quad_max_on(h_lo, seg.a, seg.b).sign() >= 0 &&
           quad_max_on(h_hi, seg.a, seg.b).sign() >= 0;
}

}  // namespace

WindowHit wall_window_hit(const WallConic& wc, const Window& win) {
    if (wc.is_zero()) throw Error(Errc::degenerate_conic, "zero conic has no wall locus");

    WindowHit out;
    if (wc.u0.is_zero() && wc.u1.is_zero()) {
        // Vertical line(s) Q(beta) = 0; any t in the window works.
        Quad q{wc.q2, wc.q1, wc.q0};
        if (!quad_has_root_on(q, win.beta_lo, win.beta_hi)) return out;
        out.hit = true;
        std::vector<Rational> roots;
        collect_rational_roots(q, roots);
        for (const Rational& x : roots)
            if (win.beta_lo <= x && x <= win.beta_hi) {
                out.witness = std::make_pair(x, win.t_lo);
                break;
            }
        return out;
    }

    std::vector<std::pair<Rational, Rational>> segments;
    if (!wc.u1.is_zero()) {
        Rational pole = -wc.u0 / wc.u1;
        if (win.beta_lo <= pole && pole <= win.beta_hi) {
            if (wc.const_part(pole).is_zero()) {
                // The whole vertical line beta = pole lies on the conic.
                out.hit = true;
                out.witness = std::make_pair(pole, win.t_lo);
                return out;
            }
            segments.emplace_back(win.beta_lo, pole);
            segments.emplace_back(pole, win.beta_hi);
        } else {
            segments.emplace_back(win.beta_lo, win.beta_hi);
        }
    } else {
        segments.emplace_back(win.beta_lo, win.beta_hi);
    }

    for (const auto& [a, b] : segments) {
        if (a == b) {
            Rational u = wc.t_coeff(a);
            if (u.is_zero()) continue;
            Rational t = -wc.const_part(a) / u;
            if (win.t_lo <= t && t <= win.t_hi) {
                out.hit = true;
                out.witness = std::make_pair(a, t);
                return out;
            }
            continue;
        }
        Segment seg{a, b, wc};
        if (!segment_hits(seg, win.t_lo, win.t_hi)) continue;
        out.hit = true;
        if (auto w = segment_witness(seg, win.t_lo, win.t_hi)) {
            out.witness = w;
            return out;
        }
    }
    return out;
}

bool wall_intersects_window(const WallConic& wc, const Window& win) {
    return wall_window_hit(wc, win).hit;
}

namespace {

// Closed/open beta interval with exact endpoints.
struct BetaInterval {
    Rational lo, hi;
    bool lo_open = false, hi_open = false;
    bool empty = false;

    void clip_hi(const Rational& x, bool open) {
        if (x < hi || (x == hi && open && !hi_open)) {
            hi = x;
            hi_open = open;
        }
        normalize();
    }
    void clip_lo(const Rational& x, bool open) {
        if (x > lo || (x == lo && open && !lo_open)) {
            lo = x;
            lo_open = open;
        }
        normalize();
    }
    void normalize() {
        if (lo > hi || (lo == hi && (lo_open || hi_open))) empty = true;
    }
};

struct Cell {
    long r_num;  // integer rank as machine int (|r| <= max_rank)
    mpz_class c;
};

bool triple_less(const PseudoWall& a, const PseudoWall& b) {
    return std::tie(a.r, a.c, a.d2) < std::tie(b.r, b.c, b.d2);
}

}  // namespace

std::string conic_canonical_key(const WallConic& wc) {
    const Rational* coeffs[5] = {&wc.u0, &wc.u1, &wc.q0, &wc.q1, &wc.q2};
    Rational scale(1);
    for (const Rational* c : coeffs)
        if (!c->is_zero()) {
            scale = *c;
            break;
        }
    std::string key;
    for (const Rational* c : coeffs) {
        key += (*c / scale).str();
        key += '|';
    }
    return key;
}

std::vector<PseudoWall> enumerate_pseudo_walls(const NumClass& vE, const Window& win,
                                               int max_rank, const VarietyModel& model,
                                               int threads) {
    Window::make(win.beta_lo, win.beta_hi, win.t_lo, win.t_hi);  // revalidate
    if (max_rank < 1) throw Error(Errc::precondition_violated, "max_rank must be >= 1");
    if (!is_lattice_point(vE, model))
        throw Error(Errc::precondition_violated, "vE must be a lattice point");

    const Rational& rE = vE.r;
    const Rational& cE = vE.c;
    const Rational& d2E = vE.d2;
    // Twisted ch1 of vE is linear in beta: positivity at the endpoints gives
    // positivity on the whole window.
    if ((cE - win.beta_lo * rE).sign() <= 0 || (cE - win.beta_hi * rE).sign() <= 0)
        throw Error(Errc::ch1_sign_change, "twisted ch1 of vE must stay positive on the window");

    // Candidate (r, c) cells: some beta in the window must put the twisted
    // ch1 of w in [0, ch1^beta(vE)).
    std::vector<Cell> cells;
    for (long rr = -max_rank; rr <= max_rank; ++rr) {
        Rational r(rr);
        Rational rho = rE - r;
        Rational cmin_rat = min(win.beta_lo * r, win.beta_hi * r);
        Rational cmax_rat = cE - min(win.beta_lo * rho, win.beta_hi * rho);
        mpz_class c_from = cmin_rat.ceil();
        mpz_class c_to = cmax_rat.is_integer() ? mpz_class(cmax_rat.num() - 1) : cmax_rat.floor();
        for (mpz_class cc = c_from; cc <= c_to; ++cc) {
            Rational c{mpz_class(cc)};
            BetaInterval iv{win.beta_lo, win.beta_hi};
            if (r.sign() > 0)
                iv.clip_hi(c / r, false);
            else if (r.sign() < 0)
                iv.clip_lo(c / r, false);
            else if (c.sign() < 0)
                continue;
            if (rho.sign() > 0)
                iv.clip_hi((cE - c) / rho, true);
            else if (rho.sign() < 0)
                iv.clip_lo((cE - c) / rho, true);
            else if ((cE - c).sign() <= 0)
                continue;
            if (!iv.empty) cells.push_back({rr, mpz_class(cc)});
        }
    }

    const Rational lam2(model.lam2);
    auto process_cell = [&](const Cell& cell) {
        std::vector<PseudoWall> found;
        Rational r(cell.r_num);
        Rational c{mpz_class(cell.c)};
        Rational rho = rE - r;

        // d2 bounds from the two discriminant conditions where the relevant
        // rank is nonzero.
        std::optional<Rational> lo, hi;
        if (r.sign() > 0) hi = c * c / (2 * r);
        if (r.sign() < 0) lo = c * c / (2 * r);
        if (rho.sign() > 0) {
            Rational b = d2E - (cE - c) * (cE - c) / (2 * rho);
            lo = lo ? max(*lo, b) : b;
        }
        if (rho.sign() < 0) {
            Rational b = d2E - (cE - c) * (cE - c) / (2 * rho);
            hi = hi ? min(*hi, b) : b;
        }
        if (!lo || !hi) {
            // Missing side: bound d2 by the conics through the window
            // corners. d2 solves L = 0 affinely at fixed (beta, t).
            Rational u0 = (r * cE - rE * c) / 6;
            std::optional<Rational> hull_lo, hull_hi;
            for (const Rational& beta : {win.beta_lo, win.beta_hi}) {
                Rational qc = d2E * c - r * d2E * beta + (cE * r - c * rE) / 2 * beta * beta;
                Rational den = cE - rE * beta;  // positive on the window
                for (const Rational& t : {win.t_lo, win.t_hi}) {
                    Rational d2c = (u0 * t + qc) / den;
                    hull_lo = hull_lo ? min(*hull_lo, d2c) : d2c;
                    hull_hi = hull_hi ? max(*hull_hi, d2c) : d2c;
                }
            }
            if (!lo) lo = *hull_lo;
            if (!hi) hi = *hull_hi;
        }
        if (*lo > *hi) return found;

        mpz_class k_from = (*lo * lam2).ceil();
        mpz_class k_to = (*hi * lam2).floor();
        for (mpz_class k = k_from; k <= k_to; ++k) {
            Rational d2 = Rational(mpz_class(k)) / lam2;
            NumClass w{r, c, d2, 0};
            WallConic conic = wall_curve(vE, w);
            if (conic.is_zero()) continue;
            WindowHit hit = wall_window_hit(conic, win);
            if (!hit.hit) continue;
            found.push_back({r, c, d2, conic, hit.witness});
        }
        return found;
    };

    std::vector<std::vector<PseudoWall>> per_cell(cells.size());
    int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(cells.size())));
    if (nthreads <= 1) {
        for (size_t i = 0; i < cells.size(); ++i) per_cell[i] = process_cell(cells[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                per_cell[i] = process_cell(cells[i]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Merge in cell order, dedup proportional conics keeping the least
    // (r, c, d2): the result does not depend on the thread count.
    std::map<std::string, PseudoWall> dedup;
    for (const auto& batch : per_cell)
        for (const auto& pw : batch) {
            auto key = conic_canonical_key(pw.conic);
            auto it = dedup.find(key);
            if (it == dedup.end())
                dedup.emplace(std::move(key), pw);
            else if (triple_less(pw, it->second))
                it->second = pw;
        }

    std::vector<PseudoWall> out;
    out.reserve(dedup.size());
    for (auto& [key, pw] : dedup) out.push_back(std::move(pw));
    std::sort(out.begin(), out.end(), triple_less);
    return out;
}

bool region_p3(const Rational& s, const Rational& t) {
    if (t.sign() <= 0 || t >= Rational(1, 2)) return false;
    return s > (7 * t - 2) / (6 * (t + 1));
}

bool region_p3_lemma(const Rational& s, const Rational& t) {
    return region_p3(s, t) && s <= Rational(1, 6);
}

bool region_quadric_tsq(const Rational& tsq) {
    if (tsq.sign() <= 0) throw Error(Errc::invalid_ample_class, "t = alpha^2 must be positive");
    // squared form of 2 alpha^3 < 1/(12 sqrt 3); equality needs
    // alpha^6 = 1/1728 which no rational alpha attains
    return 1728 * tsq * tsq * tsq < Rational(1);
}

bool region_quadric(const Rational& alpha) {
    if (alpha.sign() <= 0) throw Error(Errc::invalid_ample_class, "alpha must be positive");
    return region_quadric_tsq(alpha * alpha);
}

bool region_p3_intro_tsq(const Rational& tsq) {
    if (tsq.sign() <= 0) throw Error(Errc::invalid_ample_class, "t = alpha^2 must be positive");
    return tsq * tsq * tsq < Rational(27);
}

bool region_p3_intro(const Rational& alpha) {
    if (alpha.sign() <= 0) throw Error(Errc::invalid_ample_class, "alpha must be positive");
    return region_p3_intro_tsq(alpha * alpha);
}

}  // namespace tiltwall
